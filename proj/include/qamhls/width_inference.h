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

#ifndef QAMHLS_WIDTH_INFERENCE_H_
#define QAMHLS_WIDTH_INFERENCE_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "qamhls/rational.h"

namespace qamhls {

// Integer expression tree for bit-width inference.
struct ExprNode {
  enum class Kind { kLeaf, kAdd, kSub, kMul, kShl, kShr, kCast };

  Kind kind = Kind::kLeaf;
  // Leaf: variable name and value range. Declared leaves carry their width
  // and take the full range of that type.
  std::string name;
  BigInt lo = 0;
  BigInt hi = 0;
  bool is_signed = false;
  // Declared leaf width or cast target width (0 for a plain range leaf).
  int width = 0;
  // Shift amount for kShl / kShr.
  int shift = 0;
  std::vector<ExprNode> children;

  friend bool operator==(const ExprNode&, const ExprNode&) = default;
};

ExprNode RangeLeaf(std::string name, BigInt lo, BigInt hi);
ExprNode DeclaredLeaf(std::string name, int width, bool is_signed);
ExprNode AddNode(ExprNode a, ExprNode b);
ExprNode SubNode(ExprNode a, ExprNode b);
ExprNode MulNode(ExprNode a, ExprNode b);
ExprNode ShlNode(int k, ExprNode a);
ExprNode ShrNode(int k, ExprNode a);
ExprNode CastNode(int width, bool is_signed, ExprNode a);

struct WidthInfo {
  BigInt lo;
  BigInt hi;
  bool is_signed = false;
  int width = 0;
};

// Smallest W holding [lo, hi] (signed: -2^(W-1) .. 2^(W-1)-1, unsigned:
// 0 .. 2^W-1). At least 1.
int MinWidth(const BigInt& lo, const BigInt& hi, bool is_signed);

// Range of a W-bit type.
BigInt TypeMin(int width, bool is_signed);
BigInt TypeMax(int width, bool is_signed);

struct AnnotatedNode {
  const ExprNode* node;
  int depth;
  WidthInfo info;
};

// Interval propagation. A cast keeps its operand's interval when it fits
// the target type and otherwise takes the type's full range, since an
// out-of-range value wraps. Results are signed when an operand is signed or
// the interval goes negative. Nodes are returned in pre-order.
absl::StatusOr<std::vector<AnnotatedNode>> InferWidths(const ExprNode& root);

// Concrete evaluation: shr floors, casts wrap modulo 2^W.
BigInt EvaluateExpr(const ExprNode& node,
                    const std::map<std::string, BigInt>& env);

// Fixed-width per-node listing: indented node, interval, width.
std::string WidthReport(const std::vector<AnnotatedNode>& nodes);
std::string WidthReportCsv(const std::vector<AnnotatedNode>& nodes);

// One-line label of a node without its children, e.g. "mul" or "cast s17".
std::string NodeLabel(const ExprNode& node);

}  // namespace qamhls

#endif  // QAMHLS_WIDTH_INFERENCE_H_
