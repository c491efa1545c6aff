#include "soficlab/encoding.hpp"

#include <stdexcept>

namespace soficlab {
namespace enc {

namespace {
void check_room(Elem const& in, size_t pos, size_t need) {
  if (pos + need > in.size()) {
    throw std::out_of_range("encoding truncated");
  }
}
}  // namespace

void put_u32(Elem& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((v >> shift) & 0xFF));
  }
}

std::uint32_t get_u32(Elem const& in, size_t& pos) {
  check_room(in, pos, 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) {
    v = (v << 8) | static_cast<unsigned char>(in[pos++]);
  }
  return v;
}

void put_i64(Elem& out, std::int64_t v) {
  std::uint64_t u = static_cast<std::uint64_t>(v) ^ (1ULL << 63);
  for (int shift = 56; shift >= 0; shift -= 8) {
    out.push_back(static_cast<char>((u >> shift) & 0xFF));
  }
}

std::int64_t get_i64(Elem const& in, size_t& pos) {
  check_room(in, pos, 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) {
    u = (u << 8) | static_cast<unsigned char>(in[pos++]);
  }
  return static_cast<std::int64_t>(u ^ (1ULL << 63));
}

void put_uvarint(Elem& out, std::uint64_t v) {
  while (v >= 0x80) {
    out.push_back(static_cast<char>((v & 0x7F) | 0x80));
    v >>= 7;
  }
  out.push_back(static_cast<char>(v));
}

std::uint64_t get_uvarint(Elem const& in, size_t& pos) {
  std::uint64_t v     = 0;
  int           shift = 0;
  for (;;) {
    check_room(in, pos, 1);
    unsigned char b = static_cast<unsigned char>(in[pos++]);
    v |= static_cast<std::uint64_t>(b & 0x7F) << shift;
    if (!(b & 0x80)) {
      return v;
    }
    shift += 7;
    if (shift > 63) {
      throw std::out_of_range("varint too long");
    }
  }
}

void put_bytes(Elem& out, Elem const& part) {
  put_uvarint(out, part.size());
  out.append(part);
}

Elem get_bytes(Elem const& in, size_t& pos) {
  size_t len = static_cast<size_t>(get_uvarint(in, pos));
  check_room(in, pos, len);
  Elem part = in.substr(pos, len);
  pos += len;
  return part;
}

Elem u32(std::uint32_t v) {
  Elem out;
  put_u32(out, v);
  return out;
}

Elem i64(std::int64_t v) {
  Elem out;
  put_i64(out, v);
  return out;
}

Elem tuple(std::vector<Elem> const& parts) {
  Elem out;
  for (auto const& p : parts) {
    put_bytes(out, p);
  }
  return out;
}

std::vector<Elem> untuple(Elem const& in) {
  std::vector<Elem> parts;
  size_t            pos = 0;
  while (pos < in.size()) {
    parts.push_back(get_bytes(in, pos));
  }
  return parts;
}

namespace {
constexpr char kB64Alphabet[]
    = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

int b64_value(char c) {
  if (c >= 'A' && c <= 'Z') return c - 'A';
  if (c >= 'a' && c <= 'z') return c - 'a' + 26;
  if (c >= '0' && c <= '9') return c - '0' + 52;
  if (c == '+') return 62;
  if (c == '/') return 63;
  return -1;
}
}  // namespace

std::string base64_encode(std::string const& bytes) {
  std::string out;
  out.reserve((bytes.size() + 2) / 3 * 4);
  size_t i = 0;
  while (i + 3 <= bytes.size()) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16)
                      | (static_cast<unsigned char>(bytes[i + 1]) << 8)
                      | static_cast<unsigned char>(bytes[i + 2]);
    out.push_back(kB64Alphabet[(v >> 18) & 63]);
    out.push_back(kB64Alphabet[(v >> 12) & 63]);
    out.push_back(kB64Alphabet[(v >> 6) & 63]);
    out.push_back(kB64Alphabet[v & 63]);
    i += 3;
  }
  size_t rem = bytes.size() - i;
  if (rem == 1) {
    std::uint32_t v = static_cast<unsigned char>(bytes[i]) << 16;
    out.push_back(kB64Alphabet[(v >> 18) & 63]);
    out.push_back(kB64Alphabet[(v >> 12) & 63]);
    out.append("==");
  } else if (rem == 2) {
    std::uint32_t v = (static_cast<unsigned char>(bytes[i]) << 16)
                      | (static_cast<unsigned char>(bytes[i + 1]) << 8);
    out.push_back(kB64Alphabet[(v >> 18) & 63]);
    out.push_back(kB64Alphabet[(v >> 12) & 63]);
    out.push_back(kB64Alphabet[(v >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

std::string base64_decode(std::string const& text) {
  if (text.size() % 4 != 0) {
    throw std::invalid_argument("base64 length not a multiple of 4");
  }
  std::string out;
  out.reserve(text.size() / 4 * 3);
  for (size_t i = 0; i < text.size(); i += 4) {
    int pad = 0;
    std::uint32_t v = 0;
    for (int j = 0; j < 4; ++j) {
      char c = text[i + j];
      if (c == '=') {
        if (i + 4 != text.size() || j < 2) {
          throw std::invalid_argument("bad base64 padding");
        }
        ++pad;
        v <<= 6;
        continue;
      }
      if (pad > 0) {
        throw std::invalid_argument("bad base64 padding");
      }
      int d = b64_value(c);
      if (d < 0) {
        throw std::invalid_argument("bad base64 character");
      }
      v = (v << 6) | static_cast<std::uint32_t>(d);
    }
    out.push_back(static_cast<char>((v >> 16) & 0xFF));
    if (pad < 2) out.push_back(static_cast<char>((v >> 8) & 0xFF));
    if (pad < 1) out.push_back(static_cast<char>(v & 0xFF));
  }
  return out;
}

}  // namespace enc
}  // namespace soficlab
