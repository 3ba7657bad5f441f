#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace leafy {

using Rational = boost::rational<std::int64_t>;

/// Always "p/q", including integers ("27/1").
std::string to_string(const Rational& r);

/// Accepts "p/q" or a bare integer. Throws ParseError.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace leafy
