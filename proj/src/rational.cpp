#include "soficlab/rational.hpp"

#include <stdexcept>

namespace soficlab {

std::string rational_str(Rational const& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string const& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    if (den <= 0) {
      throw std::invalid_argument("denominator must be positive");
    }
    return Rational(num, den);
  } catch (std::exception const&) {
    throw std::invalid_argument("cannot parse rational \"" + text
                                + "\" (expected p/q or integer)");
  }
}

double rational_to_double(Rational const& r) {
  return r.convert_to<double>();
}

}  // namespace soficlab
