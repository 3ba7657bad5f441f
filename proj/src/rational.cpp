#include "leafy/rational.hpp"

#include <charconv>

#include "leafy/errors.hpp"

namespace leafy {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("malformed rational '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  auto num = parse_int(text.substr(0, slash), text);
  auto den = parse_int(text.substr(slash + 1), text);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace leafy
