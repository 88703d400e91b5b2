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

#include "qamhls/fixed_point.h"

#include <algorithm>
#include <sstream>

#include <cstdlib>
#include <iostream>
#include "absl/status/status.h"
#include "fmt/format.h"

namespace qamhls {
namespace {

[[noreturn]] void Die(const absl::Status& status) {
  std::cerr << "fatal: " << status << "\n";
  std::abort();
}

int BitLength(absl::uint128 v) {
  int n = 0;
  while (v != 0) {
    v >>= 1;
    ++n;
  }
  return n;
}

absl::uint128 LowMask(int bits) {
  return bits >= 128 ? ~absl::uint128(0)
                     : (absl::uint128(1) << bits) - 1;
}

// Reinterprets the low W bits of `pattern` as a value of `format`.
absl::int128 FromPattern(absl::uint128 pattern, const FxFormat& format) {
  const int w = format.width();
  pattern &= LowMask(w);
  if (format.is_signed() && ((pattern >> (w - 1)) & 1) != 0) {
    return static_cast<absl::int128>(pattern) -
           static_cast<absl::int128>(absl::uint128(1) << w);
  }
  return static_cast<absl::int128>(pattern);
}

// `q` is exact; bring it into range using the format's overflow mode.
absl::int128 FitRange(absl::int128 q, const FxFormat& format) {
  if (q >= format.min_raw() && q <= format.max_raw()) return q;
  if (format.overflow() == Overflow::kSat) {
    return q < format.min_raw() ? format.min_raw() : format.max_raw();
  }
  return FromPattern(static_cast<absl::uint128>(q), format);
}

// r * 2^shift brought into `format`. Exact products up to 2^126 are
// formed directly; anything larger is outside every 64-bit range.
absl::int128 ScaleUpAndFit(absl::int128 r, int shift, const FxFormat& format) {
  if (r == 0) return 0;
  const absl::uint128 mag = r < 0 ? static_cast<absl::uint128>(-r)
                                  : static_cast<absl::uint128>(r);
  if (shift < 128 && BitLength(mag) + shift <= 126) {
    return FitRange(r << shift, format);
  }
  if (format.overflow() == Overflow::kSat) {
    return r < 0 ? format.min_raw() : format.max_raw();
  }
  if (shift >= 128) return 0;
  return FromPattern(static_cast<absl::uint128>(r) << shift, format);
}

// r / 2^shift on the integer grid with the given rounding, shift >= 1.
absl::int128 ScaleDown(absl::int128 r, int shift, Quant quant) {
  if (shift >= 127) {
    // Only |r| < 2^65 reaches here, so the quotient is within (-1, 1).
    return quant == Quant::kTrn && r < 0 ? -1 : 0;
  }
  const absl::int128 floor = r >> shift;
  const absl::int128 rem = r - (floor << shift);
  const absl::int128 half = absl::int128(1) << (shift - 1);
  switch (quant) {
    case Quant::kTrn:
      return floor;
    case Quant::kRnd:
      return rem >= half ? floor + 1 : floor;
    case Quant::kRndZero:
      if (rem > half) return floor + 1;
      if (rem < half) return floor;
      return floor < 0 ? floor + 1 : floor;
  }
  return floor;
}

absl::Status WidthError(std::string_view op, const FxFormat& a,
                        const FxFormat& b, int width) {
  return absl::OutOfRangeError(
      fmt::format("{} of {} and {} needs {} bits; the limit is {}", op,
                  a.ToString(), b.ToString(), width, kMaxWidth));
}

}  // namespace

std::string_view QuantName(Quant q) {
  switch (q) {
    case Quant::kTrn:
      return "TRN";
    case Quant::kRnd:
      return "RND";
    case Quant::kRndZero:
      return "RND_ZERO";
  }
  return "?";
}

std::string_view OverflowName(Overflow o) {
  return o == Overflow::kSat ? "SAT" : "WRAP";
}

absl::StatusOr<Quant> ParseQuant(std::string_view name) {
  for (Quant q : {Quant::kTrn, Quant::kRnd, Quant::kRndZero}) {
    if (name == QuantName(q)) return q;
  }
  return absl::InvalidArgumentError(
      fmt::format("unknown quantization mode '{}'", name));
}

absl::StatusOr<Overflow> ParseOverflow(std::string_view name) {
  for (Overflow o : {Overflow::kSat, Overflow::kWrap}) {
    if (name == OverflowName(o)) return o;
  }
  return absl::InvalidArgumentError(
      fmt::format("unknown overflow mode '{}'", name));
}

absl::StatusOr<FxFormat> FxFormat::Create(int width, int int_bits,
                                          Signedness signedness, Quant quant,
                                          Overflow overflow) {
  if (width < 1 || width > kMaxWidth) {
    return absl::InvalidArgumentError(
        fmt::format("width {} outside [1, {}]", width, kMaxWidth));
  }
  if (int_bits < 0 || int_bits > width) {
    return absl::InvalidArgumentError(
        fmt::format("integer bits {} outside [0, {}]", int_bits, width));
  }
  return FxFormat(width, int_bits, signedness, quant, overflow);
}

FxFormat FxFormat::Signed(int width, int int_bits, Quant quant,
                          Overflow overflow) {
  absl::StatusOr<FxFormat> f =
      Create(width, int_bits, Signedness::kSigned, quant, overflow);
  if (!f.ok()) Die(f.status());
  return *f;
}

FxFormat FxFormat::Unsigned(int width, int int_bits, Quant quant,
                            Overflow overflow) {
  absl::StatusOr<FxFormat> f =
      Create(width, int_bits, Signedness::kUnsigned, quant, overflow);
  if (!f.ok()) Die(f.status());
  return *f;
}

absl::int128 FxFormat::min_raw() const {
  return is_signed() ? -(absl::int128(1) << (width_ - 1)) : absl::int128(0);
}

absl::int128 FxFormat::max_raw() const {
  return is_signed() ? (absl::int128(1) << (width_ - 1)) - 1
                     : (absl::int128(1) << width_) - 1;
}

FxFormat FxFormat::WithModes(Quant quant, Overflow overflow) const {
  return FxFormat(width_, int_bits_, signedness_, quant, overflow);
}

std::string FxFormat::ToString() const {
  return fmt::format("({}{},{},{},{})", is_signed() ? "" : "u", width_,
                     int_bits_, QuantName(quant_), OverflowName(overflow_));
}

absl::StatusOr<FxValue> FxValue::FromRaw(absl::int128 raw,
                                         const FxFormat& format) {
  if (raw < format.min_raw() || raw > format.max_raw()) {
    std::ostringstream os;
    os << "raw " << raw << " outside the range of " << format.ToString();
    return absl::OutOfRangeError(os.str());
  }
  return FxValue(raw, format);
}

Rational FxValue::ToRational() const {
  return Rational(FromInt128(raw_)) * format_.lsb();
}

double FxValue::ToDouble() const { return qamhls::ToDouble(ToRational()); }

absl::int128 FxValue::ToInt() const {
  const int f = format_.frac_bits();
  if (f == 0) return raw_;
  if (f >= 127) return 0;
  absl::int128 q = raw_ >> f;
  if (raw_ < 0 && (q << f) != raw_) q += 1;
  return q;
}

std::string FxValue::ToString() const {
  std::ostringstream os;
  os << raw_ << "@" << format_.ToString();
  return os.str();
}

std::string FxValue::ToDecimal() const {
  return ToDecimalString(ToRational());
}

bool FxValue::ValueEquals(const FxValue& other) const {
  const int fa = format_.frac_bits();
  const int fb = other.format_.frac_bits();
  const int f = std::max(fa, fb);
  return (raw_ << (f - fa)) == (other.raw_ << (f - fb));
}

std::ostream& operator<<(std::ostream& os, const FxFormat& f) {
  return os << f.ToString();
}

std::ostream& operator<<(std::ostream& os, const FxValue& v) {
  return os << v.ToString() << " = " << v.ToDecimal();
}

FxValue Convert(const Rational& x, const FxFormat& format) {
  const Rational scaled = x * Pow2(format.frac_bits());
  BigInt q;
  switch (format.quant()) {
    case Quant::kTrn:
      q = Floor(scaled);
      break;
    case Quant::kRnd:
      q = Floor(scaled + Rational(1, 2));
      break;
    case Quant::kRndZero:
      q = scaled >= 0 ? Ceil(scaled - Rational(1, 2))
                      : Floor(scaled + Rational(1, 2));
      break;
  }
  const BigInt lo = FromInt128(format.min_raw());
  const BigInt hi = FromInt128(format.max_raw());
  if (q < lo || q > hi) {
    if (format.overflow() == Overflow::kSat) {
      q = q < lo ? lo : hi;
    } else {
      const BigInt modulus = BigInt(1) << format.width();
      q %= modulus;
      if (q < 0) q += modulus;
      if (q > hi) q -= modulus;
    }
  }
  return FxValue(ToInt128(q), format);
}

FxValue Cast(const FxValue& v, const FxFormat& format) {
  const int shift = format.frac_bits() - v.format().frac_bits();
  if (shift >= 0) {
    return FxValue(ScaleUpAndFit(v.raw(), shift, format), format);
  }
  return FxValue(FitRange(ScaleDown(v.raw(), -shift, format.quant()), format),
                 format);
}

absl::StatusOr<FxFormat> AddResultFormat(const FxFormat& a,
                                         const FxFormat& b) {
  const bool result_signed = a.is_signed() || b.is_signed();
  // An unsigned operand needs one more integer bit once a sign exists.
  const int ia = a.int_bits() + (result_signed && !a.is_signed() ? 1 : 0);
  const int ib = b.int_bits() + (result_signed && !b.is_signed() ? 1 : 0);
  const int int_bits = std::max(ia, ib) + 1;
  const int width = int_bits + std::max(a.frac_bits(), b.frac_bits());
  if (width > kMaxWidth) return WidthError("add", a, b, width);
  return FxFormat::Create(width, int_bits,
                          result_signed ? Signedness::kSigned
                                        : Signedness::kUnsigned);
}

absl::StatusOr<FxFormat> SubResultFormat(const FxFormat& a,
                                         const FxFormat& b) {
  const bool mixed = a.is_signed() != b.is_signed();
  const int ia = a.int_bits() + (mixed && !a.is_signed() ? 1 : 0);
  const int ib = b.int_bits() + (mixed && !b.is_signed() ? 1 : 0);
  const int int_bits = std::max(ia, ib) + 1;
  const int width = int_bits + std::max(a.frac_bits(), b.frac_bits());
  if (width > kMaxWidth) return WidthError("sub", a, b, width);
  return FxFormat::Create(width, int_bits, Signedness::kSigned);
}

absl::StatusOr<FxFormat> MulResultFormat(const FxFormat& a,
                                         const FxFormat& b) {
  const int width = a.width() + b.width();
  if (width > kMaxWidth) return WidthError("mul", a, b, width);
  return FxFormat::Create(width, a.int_bits() + b.int_bits(),
                          a.is_signed() || b.is_signed()
                              ? Signedness::kSigned
                              : Signedness::kUnsigned);
}

absl::StatusOr<FxValue> Add(const FxValue& a, const FxValue& b) {
  absl::StatusOr<FxFormat> f = AddResultFormat(a.format(), b.format());
  if (!f.ok()) return f.status();
  const int fr = f->frac_bits();
  return FxValue((a.raw() << (fr - a.format().frac_bits())) +
                     (b.raw() << (fr - b.format().frac_bits())),
                 *f);
}

absl::StatusOr<FxValue> Sub(const FxValue& a, const FxValue& b) {
  absl::StatusOr<FxFormat> f = SubResultFormat(a.format(), b.format());
  if (!f.ok()) return f.status();
  const int fr = f->frac_bits();
  return FxValue((a.raw() << (fr - a.format().frac_bits())) -
                     (b.raw() << (fr - b.format().frac_bits())),
                 *f);
}

absl::StatusOr<FxValue> Mul(const FxValue& a, const FxValue& b) {
  absl::StatusOr<FxFormat> f = MulResultFormat(a.format(), b.format());
  if (!f.ok()) return f.status();
  return FxValue(a.raw() * b.raw(), *f);
}

FxValue ShiftRight(const FxValue& a, int n) {
  if (n < 0) Die(absl::InvalidArgumentError("negative shift"));
  return FxValue(a.raw() >> std::min(n, 127), a.format());
}

FxValue ShiftLeft(const FxValue& a, int n) {
  if (n < 0) Die(absl::InvalidArgumentError("negative shift"));
  return FxValue(ScaleUpAndFit(a.raw(), n, a.format()), a.format());
}

absl::StatusOr<bool> BitGet(const FxValue& a, int k) {
  if (k < 0 || k >= a.format().width()) {
    return absl::OutOfRangeError(
        fmt::format("bit {} outside [0, {})", k, a.format().width()));
  }
  return ((static_cast<absl::uint128>(a.raw()) >> k) & 1) != 0;
}

absl::StatusOr<FxValue> BitSet(const FxValue& a, int k, bool bit) {
  if (k < 0 || k >= a.format().width()) {
    return absl::OutOfRangeError(
        fmt::format("bit {} outside [0, {})", k, a.format().width()));
  }
  absl::uint128 pattern = static_cast<absl::uint128>(a.raw());
  const absl::uint128 mask = absl::uint128(1) << k;
  pattern = bit ? (pattern | mask) : (pattern & ~mask);
  return FxValue(FromPattern(pattern, a.format()), a.format());
}

}  // namespace qamhls
