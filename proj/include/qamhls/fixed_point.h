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

#ifndef QAMHLS_FIXED_POINT_H_
#define QAMHLS_FIXED_POINT_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "absl/numeric/int128.h"
#include "absl/status/statusor.h"
#include "qamhls/rational.h"

namespace qamhls {

// Quantization applied when a value is narrowed to fewer fractional bits.
enum class Quant {
  kTrn,      // floor toward -inf
  kRnd,      // nearest, ties toward +inf
  kRndZero,  // nearest, ties toward zero
};

// Behavior when a value falls outside the representable range.
enum class Overflow {
  kWrap,  // keep the low W bits, reinterpret as two's complement
  kSat,   // clamp to the range
};

enum class Signedness { kSigned, kUnsigned };

std::string_view QuantName(Quant q);
std::string_view OverflowName(Overflow o);
absl::StatusOr<Quant> ParseQuant(std::string_view name);
absl::StatusOr<Overflow> ParseOverflow(std::string_view name);

inline constexpr int kMaxWidth = 64;

// Shape of a fixed-point number: W total bits, I of them integer bits (the
// sign bit included for signed formats), so the LSB weight is 2^(I-W).
// Defaults follow the usual hardware-type defaults: truncate and wrap.
class FxFormat {
 public:
  static absl::StatusOr<FxFormat> Create(
      int width, int int_bits, Signedness signedness = Signedness::kSigned,
      Quant quant = Quant::kTrn, Overflow overflow = Overflow::kWrap);

  // For formats known valid at the call site; aborts otherwise.
  static FxFormat Signed(int width, int int_bits, Quant quant = Quant::kTrn,
                         Overflow overflow = Overflow::kWrap);
  static FxFormat Unsigned(int width, int int_bits, Quant quant = Quant::kTrn,
                           Overflow overflow = Overflow::kWrap);

  int width() const { return width_; }
  int int_bits() const { return int_bits_; }
  int frac_bits() const { return width_ - int_bits_; }
  bool is_signed() const { return signedness_ == Signedness::kSigned; }
  Signedness signedness() const { return signedness_; }
  Quant quant() const { return quant_; }
  Overflow overflow() const { return overflow_; }

  absl::int128 min_raw() const;
  absl::int128 max_raw() const;
  Rational lsb() const { return Pow2(-frac_bits()); }

  FxFormat WithModes(Quant quant, Overflow overflow) const;

  // "(W,I,Q,O)", with a 'u' before W for unsigned formats.
  std::string ToString() const;

  friend bool operator==(const FxFormat&, const FxFormat&) = default;

 private:
  FxFormat(int width, int int_bits, Signedness signedness, Quant quant,
           Overflow overflow)
      : width_(width),
        int_bits_(int_bits),
        signedness_(signedness),
        quant_(quant),
        overflow_(overflow) {}

  int width_;
  int int_bits_;
  Signedness signedness_;
  Quant quant_;
  Overflow overflow_;
};

// A two's-complement scaled integer: value = raw * 2^(I-W), exactly.
// Immutable; every operation returns a new value.
class FxValue {
 public:
  static FxValue Zero(const FxFormat& format) { return FxValue(0, format); }
  static absl::StatusOr<FxValue> FromRaw(absl::int128 raw,
                                         const FxFormat& format);

  absl::int128 raw() const { return raw_; }
  const FxFormat& format() const { return format_; }

  Rational ToRational() const;
  double ToDouble() const;

  // Integer part, fractional bits truncated toward zero.
  absl::int128 ToInt() const;
  int Sign() const { return raw_ > 0 ? 1 : (raw_ < 0 ? -1 : 0); }
  bool IsZero() const { return raw_ == 0; }

  // "raw@(W,I,Q,O)".
  std::string ToString() const;
  // Exact decimal value.
  std::string ToDecimal() const;

  // Same numeric value, possibly different formats.
  bool ValueEquals(const FxValue& other) const;

  friend bool operator==(const FxValue&, const FxValue&) = default;

 private:
  FxValue(absl::int128 raw, const FxFormat& format)
      : raw_(raw), format_(format) {}

  friend FxValue Convert(const Rational& x, const FxFormat& format);
  friend FxValue Cast(const FxValue& v, const FxFormat& format);
  friend absl::StatusOr<FxValue> Add(const FxValue& a, const FxValue& b);
  friend absl::StatusOr<FxValue> Sub(const FxValue& a, const FxValue& b);
  friend absl::StatusOr<FxValue> Mul(const FxValue& a, const FxValue& b);
  friend FxValue ShiftRight(const FxValue& a, int n);
  friend FxValue ShiftLeft(const FxValue& a, int n);
  friend absl::StatusOr<FxValue> BitSet(const FxValue& a, int k, bool bit);

  absl::int128 raw_;
  FxFormat format_;
};

std::ostream& operator<<(std::ostream& os, const FxFormat& f);
std::ostream& operator<<(std::ostream& os, const FxValue& v);

// Quantizes x onto the format's LSB grid, then applies its overflow mode.
FxValue Convert(const Rational& x, const FxFormat& format);

// Convert of an existing value, computed on raw integers.
FxValue Cast(const FxValue& v, const FxFormat& format);

// Full-precision arithmetic. The result format is wide enough that no
// rounding or overflow can occur; it fails only if that format would
// exceed 64 bits.
absl::StatusOr<FxValue> Add(const FxValue& a, const FxValue& b);
absl::StatusOr<FxValue> Sub(const FxValue& a, const FxValue& b);
absl::StatusOr<FxValue> Mul(const FxValue& a, const FxValue& b);

absl::StatusOr<FxFormat> AddResultFormat(const FxFormat& a, const FxFormat& b);
absl::StatusOr<FxFormat> SubResultFormat(const FxFormat& a, const FxFormat& b);
absl::StatusOr<FxFormat> MulResultFormat(const FxFormat& a, const FxFormat& b);

// Scale by 2^-n / 2^n keeping the format. Right shifts drop the bits shifted
// out (truncation); left shifts apply the format's overflow mode.
FxValue ShiftRight(const FxValue& a, int n);
FxValue ShiftLeft(const FxValue& a, int n);

// Bit k of the raw word has weight 2^(I-W+k).
absl::StatusOr<bool> BitGet(const FxValue& a, int k);
absl::StatusOr<FxValue> BitSet(const FxValue& a, int k, bool bit);

}  // namespace qamhls

#endif  // QAMHLS_FIXED_POINT_H_
