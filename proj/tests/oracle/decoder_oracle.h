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

#ifndef QAMHLS_TESTS_ORACLE_DECODER_ORACLE_H_
#define QAMHLS_TESTS_ORACLE_DECODER_ORACLE_H_

#include <string>
#include <vector>

#include "oracle/small_rational.h"
#include "qamhls/fixed_point.h"
#include "qamhls/qam_decoder.h"

namespace qamhls::oracle {

struct Cx {
  SmallRational re;
  SmallRational im;
  friend bool operator==(const Cx&, const Cx&) = default;
};

// Rational trace of the equalized 64-QAM decoder: every variable is an exact
// rational, and each assignment into a declared format is modeled by
// quantizing to the format's grid and range by definition.
class DecoderOracle {
 public:
  explicit DecoderOracle(const DecoderParams& params);

  struct Output {
    int symbol;
    Cx y;
    Cx e;
  };

  // true_symbol < 0 means decision-directed.
  Output Step(const Cx& in0, const Cx& in1, int true_symbol = -1);

  const std::vector<Cx>& ffe_c() const { return ffe_c_; }
  const std::vector<Cx>& dfe_c() const { return dfe_c_; }
  const std::vector<Cx>& x() const { return x_; }
  const std::vector<Cx>& sv() const { return sv_; }

  // Same layout as QamDecoder::Snapshot, raw words derived from values.
  std::string Snapshot() const;

 private:
  DecoderParams p_;
  std::vector<Cx> ffe_c_, dfe_c_, x_, sv_;
};

// Golden trace text: per step a "step <n> symbol <s>" header followed by the
// state snapshot.
std::string ZeroInputGoldenTrace(int steps);

}  // namespace qamhls::oracle

#endif  // QAMHLS_TESTS_ORACLE_DECODER_ORACLE_H_
