#ifndef SOFICLAB_ENCODING_HPP_
#define SOFICLAB_ENCODING_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace soficlab {

// Canonical element encoding. Two elements of the same monoid or group are
// equal exactly when their encodings are byte-identical, and byte order is
// used wherever a deterministic element order is needed.
using Elem = std::string;

namespace enc {

// 32-bit big-endian: byte order agrees with numeric order.
void        put_u32(Elem& out, std::uint32_t v);
std::uint32_t get_u32(Elem const& in, size_t& pos);

// 64-bit offset-binary big-endian (value + 2^63): byte order agrees with
// signed numeric order.
void         put_i64(Elem& out, std::int64_t v);
std::int64_t get_i64(Elem const& in, size_t& pos);

void   put_uvarint(Elem& out, std::uint64_t v);
std::uint64_t get_uvarint(Elem const& in, size_t& pos);

// Length-prefixed component, for tuple encodings whose parts vary in size.
void put_bytes(Elem& out, Elem const& part);
Elem get_bytes(Elem const& in, size_t& pos);

Elem u32(std::uint32_t v);
Elem i64(std::int64_t v);
Elem tuple(std::vector<Elem> const& parts);
std::vector<Elem> untuple(Elem const& in);

std::string base64_encode(std::string const& bytes);
std::string base64_decode(std::string const& text);  // throws on bad input

}  // namespace enc
}  // namespace soficlab
#endif  // SOFICLAB_ENCODING_HPP_
