#ifndef SOFICLAB_RATIONAL_HPP_
#define SOFICLAB_RATIONAL_HPP_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace soficlab {

// All proportions in this library are exact rationals; floating point only
// ever appears in report rendering.
using Int      = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(std::int64_t num, std::int64_t den) {
  return Rational(Int(num), Int(den));
}

// Renders as "p/q" with q >= 1, always including the denominator ("3/4",
// "1/1", "0/1").
std::string rational_str(Rational const& r);

// Accepts "p/q" or a bare integer "p"; q must be positive.
Rational parse_rational(std::string const& text);

double rational_to_double(Rational const& r);

}  // namespace soficlab
#endif  // SOFICLAB_RATIONAL_HPP_
