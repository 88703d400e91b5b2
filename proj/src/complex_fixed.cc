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

#include "qamhls/complex_fixed.h"

#include "absl/status/status.h"
#include "fmt/format.h"

namespace qamhls {
namespace {

// Both parts of a full-precision result in one common format. The two
// parts can come out in different formats only when one operand was
// already mixed; widen both to the larger.
absl::StatusOr<CFx> Unify(const FxValue& re, const FxValue& im) {
  if (re.format() == im.format()) return CFx::Create(re, im);
  const FxFormat& a = re.format();
  const FxFormat& b = im.format();
  const bool is_signed = a.is_signed() || b.is_signed();
  const int frac = std::max(a.frac_bits(), b.frac_bits());
  const int ints =
      std::max(a.int_bits() + (is_signed && !a.is_signed() ? 1 : 0),
               b.int_bits() + (is_signed && !b.is_signed() ? 1 : 0));
  absl::StatusOr<FxFormat> f = FxFormat::Create(
      ints + frac, ints,
      is_signed ? Signedness::kSigned : Signedness::kUnsigned);
  if (!f.ok()) return f.status();
  return CFx::Create(Cast(re, *f), Cast(im, *f));
}

}  // namespace

absl::StatusOr<CFx> CFx::Create(const FxValue& re, const FxValue& im) {
  if (re.format() != im.format()) {
    return absl::InvalidArgumentError(
        fmt::format("complex parts disagree on format: {} vs {}",
                    re.format().ToString(), im.format().ToString()));
  }
  return CFx(re, im);
}

CFx CFx::FromRational(const Rational& re, const Rational& im,
                      const FxFormat& format) {
  return CFx(Convert(re, format), Convert(im, format));
}

std::string CFx::ToString() const {
  return fmt::format("({}, {})", re_.ToDecimal(), im_.ToDecimal());
}

std::ostream& operator<<(std::ostream& os, const CFx& v) {
  return os << v.ToString();
}

FxFormat SignFormat() { return FxFormat::Signed(2, 2); }

absl::StatusOr<CFx> CAdd(const CFx& a, const CFx& b) {
  absl::StatusOr<FxValue> re = Add(a.re(), b.re());
  if (!re.ok()) return re.status();
  absl::StatusOr<FxValue> im = Add(a.im(), b.im());
  if (!im.ok()) return im.status();
  return Unify(*re, *im);
}

absl::StatusOr<CFx> CSub(const CFx& a, const CFx& b) {
  absl::StatusOr<FxValue> re = Sub(a.re(), b.re());
  if (!re.ok()) return re.status();
  absl::StatusOr<FxValue> im = Sub(a.im(), b.im());
  if (!im.ok()) return im.status();
  return Unify(*re, *im);
}

absl::StatusOr<CFx> CMul(const CFx& a, const CFx& b) {
  absl::StatusOr<FxValue> rr = Mul(a.re(), b.re());
  if (!rr.ok()) return rr.status();
  absl::StatusOr<FxValue> ii = Mul(a.im(), b.im());
  if (!ii.ok()) return ii.status();
  absl::StatusOr<FxValue> ri = Mul(a.re(), b.im());
  if (!ri.ok()) return ri.status();
  absl::StatusOr<FxValue> ir = Mul(a.im(), b.re());
  if (!ir.ok()) return ir.status();
  absl::StatusOr<FxValue> re = Sub(*rr, *ii);
  if (!re.ok()) return re.status();
  absl::StatusOr<FxValue> im = Add(*ri, *ir);
  if (!im.ok()) return im.status();
  return Unify(*re, *im);
}

absl::StatusOr<CFx> CScale(const FxValue& s, const CFx& a) {
  absl::StatusOr<FxValue> re = Mul(s, a.re());
  if (!re.ok()) return re.status();
  absl::StatusOr<FxValue> im = Mul(s, a.im());
  if (!im.ok()) return im.status();
  return Unify(*re, *im);
}

CFx SignConj(const CFx& a) {
  const FxFormat f = SignFormat();
  return *CFx::Create(*FxValue::FromRaw(a.re().Sign(), f),
                      *FxValue::FromRaw(-a.im().Sign(), f));
}

CFx CConvert(const CFx& a, const FxFormat& format) {
  return *CFx::Create(Cast(a.re(), format), Cast(a.im(), format));
}

}  // namespace qamhls
