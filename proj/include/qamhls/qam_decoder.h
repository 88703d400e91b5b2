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

#ifndef QAMHLS_QAM_DECODER_H_
#define QAMHLS_QAM_DECODER_H_

#include <array>
#include <span>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "qamhls/complex_fixed.h"
#include "qamhls/fixed_point.h"

namespace qamhls {

inline constexpr int kBitsPerSymbol = 6;
inline constexpr int kNumSymbols = 64;

// Widths are the total bit counts of the (W,0) fractional formats used for
// samples, filter sums and coefficients.
struct DecoderParams {
  int nffe = 8;
  int ndfe = 16;
  int x_width = 10;
  int ffe_width = 10;
  int dfe_width = 10;
  int ffe_coef_width = 10;
  int dfe_coef_width = 10;
  // Step sizes are 2^-shift.
  int mu_ffe_shift = 8;
  int mu_dfe_shift = 8;
  // Quantization of the coefficient accumulators. TRN is bit-exact with the
  // reference C; RND keeps small updates from being biased downward.
  Quant coef_quant = Quant::kTrn;

  absl::Status Validate() const;

  FxFormat x_format() const { return FxFormat::Signed(x_width, 0); }
  FxFormat ffe_coef_format() const { return FxFormat::Signed(ffe_coef_width, 0); }
  FxFormat dfe_coef_format() const { return FxFormat::Signed(dfe_coef_width, 0); }
  FxFormat yffe_format() const { return FxFormat::Signed(ffe_width + 1, 1); }
  FxFormat ydfe_format() const { return FxFormat::Signed(dfe_width + 1, 1); }
  FxFormat error_format() const { return FxFormat::Signed(ffe_width, 0); }

  friend bool operator==(const DecoderParams&, const DecoderParams&) = default;
};

// Decision taps hold constellation points, which need 4 fractional bits.
FxFormat DecisionFormat();

// Persistent equalizer state, zero after reset.
struct DecoderState {
  std::vector<CFx> ffe_c;
  std::vector<CFx> dfe_c;
  std::vector<CFx> x;
  std::vector<CFx> sv;

  friend bool operator==(const DecoderState&, const DecoderState&) = default;
};

struct SliceResult {
  CFx sv0;     // decided constellation point, (4,0)
  int symbol;  // 6-bit code
  int re_level;  // -4..3
  int im_level;
};

struct StepResult {
  int symbol;  // slicer decision, 0..63
  CFx y;       // equalizer output
  CFx e;       // error used for adaptation
  CFx sv0;     // value written to the first decision tap
};

// Levels of the 8x8 grid for a symbol code; inverse of the slicer's
// encoding wrap6(8*re_level + im_level).
struct SymbolLevels {
  int re;
  int im;
};
SymbolLevels LevelsOfSymbol(int symbol);
int SymbolOfLevels(int re_level, int im_level);

// Grid point (level/8 + 1/16 per part) in the given format.
CFx ConstellationPoint(int symbol, const FxFormat& format);

// 64-QAM decision on y. Per part: subtract the 1/16 offset, round-zero and
// saturate to the error width, truncate to 3 bits, add the offset back.
SliceResult Slice(const CFx& y, const DecoderParams& params);

// Bit-exact model of the T/2-spaced FFE + T-spaced DFE decoder with sign-LMS
// adaptation. Each step consumes two samples and decides one symbol.
class QamDecoder {
 public:
  static absl::StatusOr<QamDecoder> Create(const DecoderParams& params);

  void Reset();

  // x_in[0] lands in the first tap, x_in[1] in the second.
  StepResult Step(std::span<const CFx, 2> x_in);

  // As Step, but the decision tap and the error reference use the known
  // transmitted symbol. The returned symbol is still the slicer's decision.
  StepResult StepTrained(std::span<const CFx, 2> x_in, int true_symbol);

  const DecoderParams& params() const { return params_; }
  const DecoderState& state() const { return state_; }
  DecoderState& mutable_state() { return state_; }

  // All raw mantissas in array order, one line per array part.
  std::string Snapshot() const;

 private:
  explicit QamDecoder(const DecoderParams& params);

  StepResult StepImpl(std::span<const CFx, 2> x_in, const int* true_symbol);

  DecoderParams params_;
  DecoderState state_;
  FxValue mu_ffe_;
  FxValue mu_dfe_;
};

}  // namespace qamhls

#endif  // QAMHLS_QAM_DECODER_H_
