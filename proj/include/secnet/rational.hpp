// Copyright 2026 The secnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "secnet/error.hpp"

namespace secnet {

// All game quantities (costs, utilities, ratios) are exact.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

inline BigInt floor_of(const Rational& x) {
  BigInt n = boost::multiprecision::numerator(x);
  BigInt d = boost::multiprecision::denominator(x);
  BigInt q = n / d;
  if (n % d != 0 && n < 0) --q;
  return q;
}

inline BigInt ceil_of(const Rational& x) { return -floor_of(-x); }

// "p/q", "p", or a decimal such as "0.09" (read as 9/100, never via double).
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw InvalidArgument("not a rational: '" + std::string(text) + "'"); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) -> BigInt {
    s = trim(s);
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      neg = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) fail();
    BigInt v = 0;
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) fail();
      v = v * 10 + (c - '0');
    }
    return neg ? BigInt(-v) : v;
  };

  text = trim(text);
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool neg = !whole.empty() && whole.front() == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole = "0";
    if (frac.empty()) fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    BigInt w = parse_int(whole);
    if (w < 0) w = -w;
    BigInt f = parse_int(frac);
    if (f < 0) fail();
    Rational r(w * scale + f, scale);
    return neg ? Rational(-r) : r;
  }
  return Rational(parse_int(text));
}

// Canonical "p/q" (or "p" for integers).
inline std::string to_string(const Rational& x) {
  const BigInt& d = boost::multiprecision::denominator(x);
  if (d == 1) return boost::multiprecision::numerator(x).str();
  return boost::multiprecision::numerator(x).str() + "/" + d.str();
}

inline double to_double(const Rational& x) { return x.convert_to<double>(); }

}  // namespace secnet
