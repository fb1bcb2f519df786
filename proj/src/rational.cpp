#include "rational.hpp"

#include <cctype>

#include "errors.hpp"

namespace netstab {

namespace {

bool looks_like_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t k = start; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!looks_like_integer(text)) {
      throw parse_error("not a rational: '" + text + "'");
    }
    return Rational(mpz_class(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  if (!looks_like_integer(num) || !looks_like_integer(den)) {
    throw parse_error("not a rational: '" + text + "'");
  }
  mpz_class d(den);
  if (d == 0) throw parse_error("zero denominator in '" + text + "'");
  Rational r(mpz_class(num), d);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

int sign(const Rational& value) { return sgn(value); }

std::string vector_str(const std::vector<Rational>& values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ", ";
    out += rational_str(values[k]);
  }
  out += ")";
  return out;
}

}  // namespace netstab
