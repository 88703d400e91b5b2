// Copyright 2026 The qamhls Authors
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

#include "qamhls/rational.h"

#include <cstdint>

#include "absl/status/status.h"
#include "fmt/format.h"
#include <charconv>

namespace qamhls {

BigInt Floor(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) {
    q -= 1;
  }
  return q;
}

BigInt Ceil(const Rational& x) { return -Floor(-x); }

Rational Pow2(int exponent) {
  BigInt p = 1;
  if (exponent >= 0) {
    p <<= exponent;
    return Rational(p);
  }
  p <<= -exponent;
  return Rational(BigInt(1), p);
}

BigInt FromInt128(absl::int128 v) {
  BigInt hi = absl::Int128High64(v);
  BigInt lo = absl::Int128Low64(v);
  return (hi << 64) + lo;
}

absl::int128 ToInt128(const BigInt& v) {
  const bool negative = v < 0;
  const BigInt mag = negative ? BigInt(-v) : v;
  const BigInt mask64 = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<uint64_t>(mag & mask64);
  const auto hi = static_cast<uint64_t>((mag >> 64) & mask64);
  absl::int128 r = absl::MakeInt128(static_cast<int64_t>(hi), lo);
  return negative ? -r : r;
}

double ToDouble(const Rational& x) { return x.convert_to<double>(); }

namespace {

absl::StatusOr<BigInt> ParseDigits(std::string_view digits,
                                   std::string_view whole) {
  if (digits.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("malformed number '{}'", whole));
  }
  BigInt v = 0;
  for (char c : digits) {
    if (c < '0' || c > '9') {
      return absl::InvalidArgumentError(
          fmt::format("malformed number '{}'", whole));
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

absl::StatusOr<Rational> ParseRational(std::string_view text) {
  const std::string_view whole = text;
  if (size_t slash = text.find('/'); slash != std::string_view::npos) {
    absl::StatusOr<Rational> num = ParseRational(text.substr(0, slash));
    absl::StatusOr<Rational> den = ParseRational(text.substr(slash + 1));
    if (!num.ok()) return num.status();
    if (!den.ok()) return den.status();
    if (*den == 0) {
      return absl::InvalidArgumentError(
          fmt::format("zero denominator in '{}'", whole));
    }
    return *num / *den;
  }

  bool negative = false;
  if (text.starts_with('-')) {
    negative = true;
    text.remove_prefix(1);
  } else if (text.starts_with('+')) {
    text.remove_prefix(1);
  }

  int exponent = 0;
  if (size_t e = text.find_first_of("eE"); e != std::string_view::npos) {
    const std::string_view digits = text.substr(e + 1);
    const auto [end, ec] = std::from_chars(
        digits.data() + (digits.starts_with('+') ? 1 : 0),
        digits.data() + digits.size(), exponent);
    if (ec != std::errc() || end != digits.data() + digits.size() ||
        exponent < -400 || exponent > 400) {
      return absl::InvalidArgumentError(
          fmt::format("malformed exponent in '{}'", whole));
    }
    text = text.substr(0, e);
  }

  std::string_view int_part = text;
  std::string_view frac_part;
  if (size_t dot = text.find('.'); dot != std::string_view::npos) {
    int_part = text.substr(0, dot);
    frac_part = text.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("malformed number '{}'", whole));
  }
  BigInt mantissa = 0;
  if (!int_part.empty()) {
    absl::StatusOr<BigInt> ip = ParseDigits(int_part, whole);
    if (!ip.ok()) return ip.status();
    mantissa = *ip;
  }
  if (!frac_part.empty()) {
    absl::StatusOr<BigInt> fp = ParseDigits(frac_part, whole);
    if (!fp.ok()) return fp.status();
    BigInt scale = boost::multiprecision::pow(BigInt(10),
                                              static_cast<unsigned>(frac_part.size()));
    mantissa = mantissa * scale + *fp;
    exponent -= static_cast<int>(frac_part.size());
  }
  Rational value(mantissa);
  BigInt p10 = boost::multiprecision::pow(BigInt(10),
                                          static_cast<unsigned>(std::abs(exponent)));
  value = exponent >= 0 ? value * p10 : value / p10;
  return negative ? Rational(-value) : value;
}

std::string ToDecimalString(const Rational& x) {
  BigInt num = boost::multiprecision::numerator(x);
  BigInt den = boost::multiprecision::denominator(x);
  int twos = 0;
  int fives = 0;
  BigInt d = den;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) {
    return fmt::format("{}/{}", num.str(), den.str());
  }
  const int digits = std::max(twos, fives);
  // Scale to num * 10^digits / den, an exact integer.
  BigInt scaled = num * boost::multiprecision::pow(BigInt(10),
                                                   static_cast<unsigned>(digits)) /
                  den;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string s = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) {
      s.insert(0, digits + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
  }
  return negative ? "-" + s : s;
}

}  // namespace qamhls
