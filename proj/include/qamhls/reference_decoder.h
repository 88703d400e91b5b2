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

#ifndef QAMHLS_REFERENCE_DECODER_H_
#define QAMHLS_REFERENCE_DECODER_H_

#include <algorithm>
#include <cmath>
#include <vector>

#include "qamhls/qam_decoder.h"
#include "qamhls/rational.h"

namespace qamhls {

template <typename T>
struct Cplx {
  T re{};
  T im{};
};

template <typename T>
Cplx<T> operator+(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re + b.re, a.im + b.im};
}
template <typename T>
Cplx<T> operator-(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re - b.re, a.im - b.im};
}
template <typename T>
Cplx<T> operator*(const Cplx<T>& a, const Cplx<T>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename T>
Cplx<T> operator*(const T& s, const Cplx<T>& a) {
  return {s * a.re, s * a.im};
}

inline int64_t FloorToInt(double v) {
  return static_cast<int64_t>(std::floor(v));
}
inline int64_t FloorToInt(const Rational& v) {
  return static_cast<int64_t>(Floor(v));
}

inline int SignOf(double v) { return (v > 0) - (v < 0); }
inline int SignOf(const Rational& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// The decoder's dataflow in unquantized arithmetic: no accumulator
// truncation, no coefficient grid, no overflow. Only the slicer keeps its
// decision grid. T is double or Rational.
template <typename T>
class ReferenceDecoder {
 public:
  struct Result {
    int symbol;
    Cplx<T> y;
    Cplx<T> e;
  };

  explicit ReferenceDecoder(const DecoderParams& params)
      : params_(params),
        ffe_c_(params.nffe),
        dfe_c_(params.ndfe),
        x_(params.nffe),
        sv_(params.ndfe) {}

  // true_symbol < 0 runs decision-directed.
  Result Step(const Cplx<T>& in0, const Cplx<T>& in1, int true_symbol = -1) {
    x_[0] = in0;
    x_[1] = in1;
    Cplx<T> yffe{};
    for (int k = 0; k < params_.nffe; ++k) yffe = yffe + x_[k] * ffe_c_[k];
    Cplx<T> ydfe{};
    for (int k = 0; k < params_.ndfe; ++k) ydfe = ydfe + sv_[k] * dfe_c_[k];
    const Cplx<T> y = yffe - ydfe;

    const int re_level = Level(y.re);
    const int im_level = Level(y.im);
    const int symbol = SymbolOfLevels(re_level, im_level);
    sv_[0] = Point(true_symbol < 0 ? symbol : true_symbol);
    const Cplx<T> e = sv_[0] - y;

    const T mu_ffe = Pow2T(-params_.mu_ffe_shift);
    const T mu_dfe = Pow2T(-params_.mu_dfe_shift);
    for (int k = 0; k < params_.nffe; ++k) {
      ffe_c_[k] = ffe_c_[k] + mu_ffe * (e * SignConj(x_[k]));
    }
    for (int k = 0; k < params_.ndfe; ++k) {
      dfe_c_[k] = dfe_c_[k] - mu_dfe * (e * SignConj(sv_[k]));
    }
    for (int k = params_.nffe - 4; k >= 0; k -= 2) {
      x_[k + 3] = x_[k + 1];
      x_[k + 2] = x_[k];
    }
    for (int k = params_.ndfe - 2; k >= 0; --k) sv_[k + 1] = sv_[k];
    return {symbol, y, e};
  }

  const std::vector<Cplx<T>>& ffe_c() const { return ffe_c_; }
  const std::vector<Cplx<T>>& dfe_c() const { return dfe_c_; }
  std::vector<Cplx<T>>& mutable_ffe_c() { return ffe_c_; }
  std::vector<Cplx<T>>& mutable_dfe_c() { return dfe_c_; }
  std::vector<Cplx<T>>& mutable_x() { return x_; }
  std::vector<Cplx<T>>& mutable_sv() { return sv_; }

  static Cplx<T> Point(int symbol) {
    const SymbolLevels lv = LevelsOfSymbol(symbol);
    return {T(lv.re) / T(8) + T(1) / T(16), T(lv.im) / T(8) + T(1) / T(16)};
  }

 private:
  static T Pow2T(int e) {
    T v(1);
    for (int i = 0; i < -e; ++i) v = v / T(2);
    return v;
  }

  static int Level(const T& part) {
    const int64_t lvl = FloorToInt(T(8) * (part - T(1) / T(16)));
    return static_cast<int>(std::clamp<int64_t>(lvl, -4, 3));
  }

  static Cplx<T> SignConj(const Cplx<T>& v) {
    return {T(SignOf(v.re)), T(-SignOf(v.im))};
  }

  DecoderParams params_;
  std::vector<Cplx<T>> ffe_c_, dfe_c_, x_, sv_;
};

}  // namespace qamhls

#endif  // QAMHLS_REFERENCE_DECODER_H_
