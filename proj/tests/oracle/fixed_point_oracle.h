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

#ifndef QAMHLS_TESTS_ORACLE_FIXED_POINT_ORACLE_H_
#define QAMHLS_TESTS_ORACLE_FIXED_POINT_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "oracle/small_rational.h"
#include "qamhls/fixed_point.h"

namespace qamhls::oracle {

// Grid index of the quantized value of x on a grid of step 2^-frac_bits,
// chosen by comparing distances to the two neighbouring grid points.
int64_t QuantizeByDistance(SmallRational x, int frac_bits, Quant quant);

// Brings k into the raw range of a width-bit word, clamping or wrapping by
// repeated addition of 2^width.
int64_t FitByDefinition(int64_t k, int width, bool is_signed,
                        Overflow overflow);

// Expected raw word of converting x into the format.
int64_t ExpectedConvertRaw(SmallRational x, const FxFormat& format);

SmallRational ValueOf(int64_t raw, int frac_bits);

struct SweepReport {
  int64_t convert_checks = 0;
  int64_t add_checks = 0;
  int64_t sub_checks = 0;
  int64_t mul_checks = 0;
  int64_t shift_checks = 0;
  int64_t mismatches = 0;
  std::vector<std::string> examples;  // first few mismatches

  int64_t total_checks() const {
    return convert_checks + add_checks + sub_checks + mul_checks +
           shift_checks;
  }
};

// Exhaustive comparison of Convert, Cast, Add, Sub, Mul, ShiftLeft and
// ShiftRight against the oracle over every format with width <= max_width,
// every integer-bit count, both signednesses, every mode pair and every raw
// value. Runs on `threads` workers.
SweepReport RunExhaustiveSweep(int max_width, int threads);

}  // namespace qamhls::oracle

#endif  // QAMHLS_TESTS_ORACLE_FIXED_POINT_ORACLE_H_
