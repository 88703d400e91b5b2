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

#ifndef QAMHLS_COMPLEX_FIXED_H_
#define QAMHLS_COMPLEX_FIXED_H_

#include <ostream>
#include <string>

#include "absl/status/statusor.h"
#include "qamhls/fixed_point.h"

namespace qamhls {

// Complex fixed-point number; both parts share one format.
class CFx {
 public:
  explicit CFx(const FxFormat& format)
      : re_(FxValue::Zero(format)), im_(FxValue::Zero(format)) {}

  static absl::StatusOr<CFx> Create(const FxValue& re, const FxValue& im);
  // Converts both parts with the format's modes.
  static CFx FromRational(const Rational& re, const Rational& im,
                          const FxFormat& format);

  const FxValue& re() const { return re_; }
  const FxValue& im() const { return im_; }
  const FxFormat& format() const { return re_.format(); }
  bool IsZero() const { return re_.IsZero() && im_.IsZero(); }

  // "(re, im)" using exact decimals.
  std::string ToString() const;

  friend bool operator==(const CFx&, const CFx&) = default;

 private:
  CFx(const FxValue& re, const FxValue& im) : re_(re), im_(im) {}

  FxValue re_;
  FxValue im_;
};

std::ostream& operator<<(std::ostream& os, const CFx& v);

// Format holding the sign values -1, 0 and +1.
FxFormat SignFormat();

// Full-precision componentwise add/sub. Operands of different formats are
// fine; the result parts share the widened format.
absl::StatusOr<CFx> CAdd(const CFx& a, const CFx& b);
absl::StatusOr<CFx> CSub(const CFx& a, const CFx& b);

// (a.re*b.re - a.im*b.im, a.re*b.im + a.im*b.re), full precision, four
// multipliers.
absl::StatusOr<CFx> CMul(const CFx& a, const CFx& b);

// Real scalar times complex, full precision.
absl::StatusOr<CFx> CScale(const FxValue& s, const CFx& a);

// (sign(re), -sign(im)): the conjugated componentwise sign.
CFx SignConj(const CFx& a);

// Componentwise Cast with the target format's modes.
CFx CConvert(const CFx& a, const FxFormat& format);

}  // namespace qamhls

#endif  // QAMHLS_COMPLEX_FIXED_H_
