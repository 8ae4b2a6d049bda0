#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "arrpi/errors.hpp"

namespace arrpi {

// Exact arbitrary-precision arithmetic. cpp_rational keeps fractions reduced
// with a positive denominator, which is exactly the canonical form we need.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
inline Rational parse_rational(std::string_view text) {
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  size_t b = 0, e = text.size();
  while (b < e && is_space(text[b])) ++b;
  while (e > b && is_space(text[e - 1])) --e;
  std::string_view s = text.substr(b, e - b);
  if (s.empty()) throw ParseError("empty rational literal");

  auto parse_int = [](std::string_view t) -> Int {
    if (t.empty()) throw ParseError("empty integer in rational literal");
    size_t i = (t[0] == '+' || t[0] == '-') ? 1 : 0;
    if (i == t.size()) throw ParseError("sign without digits in rational literal");
    for (size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9')
        throw ParseError("invalid character in rational literal: '" + std::string(t) + "'");
    return Int(std::string(t));
  };

  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational literal: '" + std::string(s) + "'");
  return Rational(num, den);
}

inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace arrpi
