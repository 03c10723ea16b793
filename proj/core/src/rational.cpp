#include "wjf/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace wjf {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);

  std::size_t start = (!num.empty() && (num[0] == '-' || num[0] == '+')) ? 1 : 0;
  if (!all_digits(num, start, num.size()))
    throw std::invalid_argument("parse_rational: malformed numerator in '" + text + "'");
  if (slash != std::string::npos && !all_digits(den, 0, den.size()))
    throw std::invalid_argument("parse_rational: malformed denominator in '" + text + "'");

  Rational value(text);
  if (value.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string rational_str(const Rational& x) { return x.get_str(); }

}  // namespace wjf
