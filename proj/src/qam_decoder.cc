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

#include "qamhls/qam_decoder.h"

#include <cstdlib>
#include <iostream>
#include <utility>

#include "fmt/format.h"

namespace qamhls {
namespace {

// Every width in the datapath is bounded by DecoderParams::Validate, so the
// full-precision results below always fit in 64 bits.
template <typename T>
T Must(absl::StatusOr<T> v) {
  if (!v.ok()) {
    std::cerr << "fatal: " << v.status() << "\n";
    std::abort();
  }
  return *std::move(v);
}

FxValue Offset() {
  // offset[0] = 1 on a (4,0) zero: 2^-4.
  return Must(BitSet(FxValue::Zero(DecisionFormat()), 0, true));
}

int Signed3(int bits) { return bits >= 4 ? bits - 8 : bits; }

// mu = (fixed<W+2,2>)1 >> shift, assigned into the coefficient format.
FxValue StepSize(int data_width, int coef_width, int shift) {
  const FxValue one = Convert(Rational(1), FxFormat::Signed(data_width + 2, 2));
  return Cast(ShiftRight(one, shift), FxFormat::Signed(coef_width, 0));
}

}  // namespace

absl::Status DecoderParams::Validate() const {
  if (nffe < 2 || nffe % 2 != 0) {
    return absl::InvalidArgumentError(
        fmt::format("nffe must be even and >= 2, got {}", nffe));
  }
  if (ndfe < 1) {
    return absl::InvalidArgumentError(
        fmt::format("ndfe must be >= 1, got {}", ndfe));
  }
  for (auto [name, w] : {std::pair{"x_width", x_width},
                         std::pair{"ffe_width", ffe_width},
                         std::pair{"dfe_width", dfe_width},
                         std::pair{"ffe_coef_width", ffe_coef_width},
                         std::pair{"dfe_coef_width", dfe_coef_width}}) {
    if (w < 4 || w > 16) {
      return absl::InvalidArgumentError(
          fmt::format("{} must be in [4, 16], got {}", name, w));
    }
  }
  if (mu_ffe_shift < 0 || mu_ffe_shift > 16 || mu_dfe_shift < 0 ||
      mu_dfe_shift > 16) {
    return absl::InvalidArgumentError("step-size shifts must be in [0, 16]");
  }
  return absl::OkStatus();
}

FxFormat DecisionFormat() { return FxFormat::Signed(4, 0); }

SymbolLevels LevelsOfSymbol(int symbol) {
  const int im = Signed3(symbol & 7);
  const int m = (((symbol - im) % 64) + 64) % 64;
  return {Signed3(m / 8), im};
}

int SymbolOfLevels(int re_level, int im_level) {
  return (((8 * re_level + im_level) % 64) + 64) % 64;
}

CFx ConstellationPoint(int symbol, const FxFormat& format) {
  const SymbolLevels lv = LevelsOfSymbol(symbol);
  const Rational off(1, 16);
  return CFx::FromRational(Rational(lv.re, 8) + off, Rational(lv.im, 8) + off,
                           format);
}

SliceResult Slice(const CFx& y, const DecoderParams& params) {
  const FxValue offset = Offset();
  const FxFormat sat =
      FxFormat::Signed(params.ffe_width, 0, Quant::kRndZero, Overflow::kSat);
  const FxFormat level_format = FxFormat::Signed(3, 0);

  const FxValue r = Cast(Cast(Must(Sub(y.re(), offset)), sat), level_format);
  const FxValue i = Cast(Cast(Must(Sub(y.im(), offset)), sat), level_format);

  const CFx levels = Must(CFx::Create(r, i));
  const CFx offsets = Must(CFx::Create(offset, offset));
  const CFx sv0 = CConvert(Must(CAdd(levels, offsets)), DecisionFormat());

  // data_f = r*64 + i*8 in (6,6), then to_int into a 6-bit unsigned.
  const FxValue c64 = *FxValue::FromRaw(64, FxFormat::Signed(8, 8));
  const FxValue c8 = *FxValue::FromRaw(8, FxFormat::Signed(5, 5));
  const FxValue data_f =
      Cast(Must(Add(Must(Mul(r, c64)), Must(Mul(i, c8)))), FxFormat::Signed(6, 6));
  const FxValue as_int =
      *FxValue::FromRaw(data_f.ToInt(), FxFormat::Signed(6, 6));
  const int symbol =
      static_cast<int>(Cast(as_int, FxFormat::Unsigned(6, 6)).raw());

  return SliceResult{sv0, symbol, static_cast<int>(r.raw()),
                     static_cast<int>(i.raw())};
}

absl::StatusOr<QamDecoder> QamDecoder::Create(const DecoderParams& params) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  return QamDecoder(params);
}

QamDecoder::QamDecoder(const DecoderParams& params)
    : params_(params),
      mu_ffe_(StepSize(params.ffe_width, params.ffe_coef_width,
                       params.mu_ffe_shift)),
      mu_dfe_(StepSize(params.dfe_width, params.dfe_coef_width,
                       params.mu_dfe_shift)) {
  Reset();
}

void QamDecoder::Reset() {
  state_.ffe_c.assign(params_.nffe, CFx(params_.ffe_coef_format()));
  state_.dfe_c.assign(params_.ndfe, CFx(params_.dfe_coef_format()));
  state_.x.assign(params_.nffe, CFx(params_.x_format()));
  state_.sv.assign(params_.ndfe, CFx(DecisionFormat()));
}

StepResult QamDecoder::Step(std::span<const CFx, 2> x_in) {
  return StepImpl(x_in, nullptr);
}

StepResult QamDecoder::StepTrained(std::span<const CFx, 2> x_in,
                                   int true_symbol) {
  return StepImpl(x_in, &true_symbol);
}

StepResult QamDecoder::StepImpl(std::span<const CFx, 2> x_in,
                                const int* true_symbol) {
  DecoderState& s = state_;
  const int nffe = params_.nffe;
  const int ndfe = params_.ndfe;

  s.x[0] = CConvert(x_in[0], params_.x_format());
  s.x[1] = CConvert(x_in[1], params_.x_format());

  // Accumulators are assigned back into their declared formats after every
  // addition.
  CFx yffe(params_.yffe_format());
  for (int k = 0; k < nffe; ++k) {
    yffe = CConvert(Must(CAdd(yffe, Must(CMul(s.x[k], s.ffe_c[k])))),
                    params_.yffe_format());
  }
  CFx ydfe(params_.ydfe_format());
  for (int k = 0; k < ndfe; ++k) {
    ydfe = CConvert(Must(CAdd(ydfe, Must(CMul(s.sv[k], s.dfe_c[k])))),
                    params_.ydfe_format());
  }
  const CFx y = CConvert(Must(CSub(yffe, ydfe)), params_.yffe_format());

  const SliceResult decision = Slice(y, params_);
  s.sv[0] = true_symbol == nullptr
                ? decision.sv0
                : ConstellationPoint(*true_symbol, DecisionFormat());
  const CFx e = CConvert(Must(CSub(s.sv[0], y)), params_.error_format());

  const FxFormat ffe_update = params_.ffe_coef_format().WithModes(
      params_.coef_quant, Overflow::kWrap);
  const FxFormat dfe_update = params_.dfe_coef_format().WithModes(
      params_.coef_quant, Overflow::kWrap);
  for (int k = 0; k < nffe; ++k) {
    const CFx delta = Must(CScale(mu_ffe_, Must(CMul(e, SignConj(s.x[k])))));
    s.ffe_c[k] = CConvert(CConvert(Must(CAdd(s.ffe_c[k], delta)), ffe_update),
                          params_.ffe_coef_format());
  }
  for (int k = 0; k < ndfe; ++k) {
    const CFx delta = Must(CScale(mu_dfe_, Must(CMul(e, SignConj(s.sv[k])))));
    s.dfe_c[k] = CConvert(CConvert(Must(CSub(s.dfe_c[k], delta)), dfe_update),
                          params_.dfe_coef_format());
  }

  // x[k+2..k+3] <- x[k..k+1], highest pair first.
  for (int k = nffe - 4; k >= 0; k -= 2) {
    s.x[k + 3] = s.x[k + 1];
    s.x[k + 2] = s.x[k];
  }
  for (int k = ndfe - 2; k >= 0; --k) {
    s.sv[k + 1] = s.sv[k];
  }

  return StepResult{decision.symbol, y, e, s.sv[0]};
}

std::string QamDecoder::Snapshot() const {
  std::string out;
  auto dump = [&out](std::string_view name, const std::vector<CFx>& arr) {
    std::string re = fmt::format("{}.re:", name);
    std::string im = fmt::format("{}.im:", name);
    for (const CFx& v : arr) {
      re += fmt::format(" {}", static_cast<int64_t>(v.re().raw()));
      im += fmt::format(" {}", static_cast<int64_t>(v.im().raw()));
    }
    out += re + "\n" + im + "\n";
  };
  dump("ffe_c", state_.ffe_c);
  dump("dfe_c", state_.dfe_c);
  dump("x", state_.x);
  dump("sv", state_.sv);
  return out;
}

}  // namespace qamhls
