#include "bicomlab/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace bicomlab {

namespace {

Int parse_int(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad integer literal: " + s);
  return Int(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in rational: " + text);
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace bicomlab
