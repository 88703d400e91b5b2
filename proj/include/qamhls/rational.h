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

#ifndef QAMHLS_RATIONAL_H_
#define QAMHLS_RATIONAL_H_

#include <string>
#include <string_view>

#include "absl/numeric/int128.h"
#include "absl/status/statusor.h"
#include <boost/multiprecision/cpp_int.hpp>

namespace qamhls {

// Exact integers and rationals. Every fixed-point value is a dyadic
// rational, so these carry values between formats without loss.
using BigInt = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

BigInt Floor(const Rational& x);
BigInt Ceil(const Rational& x);

// 2^exponent for any sign of exponent.
Rational Pow2(int exponent);

BigInt FromInt128(absl::int128 v);
// Requires v to fit in 128 bits.
absl::int128 ToInt128(const BigInt& v);

double ToDouble(const Rational& x);

// Accepts "7", "-0.625", "3/4" and "1.5e-3".
absl::StatusOr<Rational> ParseRational(std::string_view text);

// Exact decimal expansion when the reduced denominator has only factors 2
// and 5 (always the case for fixed-point values); "n/d" otherwise.
std::string ToDecimalString(const Rational& x);

}  // namespace qamhls

#endif  // QAMHLS_RATIONAL_H_
