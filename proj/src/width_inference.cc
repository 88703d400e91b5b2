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

#include "qamhls/width_inference.h"

#include <algorithm>
#include <array>

#include "fmt/format.h"

namespace qamhls {
namespace {

constexpr int kMaxWidth = 64;

BigInt Pow2Int(int e) { return BigInt(1) << e; }

// Floor division by 2^k.
BigInt FloorShift(const BigInt& v, int k) {
  if (v >= 0) return v >> k;
  return -((-v + Pow2Int(k) - 1) >> k);
}

BigInt Wrap(const BigInt& v, int width, bool is_signed) {
  const BigInt m = Pow2Int(width);
  BigInt r = v % m;
  if (r < 0) r += m;
  if (is_signed && r >= Pow2Int(width - 1)) r -= m;
  return r;
}

ExprNode Op(ExprNode::Kind kind, std::vector<ExprNode> children) {
  ExprNode n;
  n.kind = kind;
  n.children = std::move(children);
  return n;
}

std::string Str(const BigInt& v) { return v.str(); }

absl::StatusOr<WidthInfo> Infer(const ExprNode& n, int depth,
                                std::vector<AnnotatedNode>& out) {
  const size_t slot = out.size();
  out.push_back({&n, depth, {}});
  std::vector<WidthInfo> kids;
  for (const ExprNode& c : n.children) {
    absl::StatusOr<WidthInfo> k = Infer(c, depth + 1, out);
    if (!k.ok()) return k.status();
    kids.push_back(*std::move(k));
  }
  const auto arity = [&](size_t want) -> absl::Status {
    if (kids.size() != want) {
      return absl::InvalidArgumentError(fmt::format(
          "'{}' takes {} operand(s), got {}", NodeLabel(n), want, kids.size()));
    }
    return absl::OkStatus();
  };

  WidthInfo info;
  bool any_signed = false;
  for (const WidthInfo& k : kids) any_signed |= k.is_signed;
  switch (n.kind) {
    case ExprNode::Kind::kLeaf:
      if (absl::Status s = arity(0); !s.ok()) return s;
      if (n.width > 0) {
        if (n.width > kMaxWidth) {
          return absl::InvalidArgumentError(fmt::format(
              "leaf '{}' declares {} bits, above {}", n.name, n.width,
              kMaxWidth));
        }
        info = {TypeMin(n.width, n.is_signed), TypeMax(n.width, n.is_signed),
                n.is_signed, n.width};
        out[slot].info = info;
        return info;
      }
      if (n.lo > n.hi) {
        return absl::InvalidArgumentError(
            fmt::format("leaf '{}' has an empty range", n.name));
      }
      info.lo = n.lo;
      info.hi = n.hi;
      info.is_signed = n.lo < 0;
      break;
    case ExprNode::Kind::kAdd:
    case ExprNode::Kind::kSub:
      if (absl::Status s = arity(2); !s.ok()) return s;
      if (n.kind == ExprNode::Kind::kAdd) {
        info.lo = kids[0].lo + kids[1].lo;
        info.hi = kids[0].hi + kids[1].hi;
      } else {
        info.lo = kids[0].lo - kids[1].hi;
        info.hi = kids[0].hi - kids[1].lo;
      }
      info.is_signed = any_signed || info.lo < 0;
      break;
    case ExprNode::Kind::kMul: {
      if (absl::Status s = arity(2); !s.ok()) return s;
      const BigInt p[4] = {kids[0].lo * kids[1].lo, kids[0].lo * kids[1].hi,
                           kids[0].hi * kids[1].lo, kids[0].hi * kids[1].hi};
      info.lo = *std::min_element(p, p + 4);
      info.hi = *std::max_element(p, p + 4);
      info.is_signed = any_signed || info.lo < 0;
      break;
    }
    case ExprNode::Kind::kShl:
    case ExprNode::Kind::kShr:
      if (absl::Status s = arity(1); !s.ok()) return s;
      if (n.shift < 0 || n.shift > kMaxWidth) {
        return absl::InvalidArgumentError(
            fmt::format("shift amount {} out of range", n.shift));
      }
      if (n.kind == ExprNode::Kind::kShl) {
        info.lo = kids[0].lo << n.shift;
        info.hi = kids[0].hi << n.shift;
      } else {
        info.lo = FloorShift(kids[0].lo, n.shift);
        info.hi = FloorShift(kids[0].hi, n.shift);
      }
      info.is_signed = kids[0].is_signed || info.lo < 0;
      break;
    case ExprNode::Kind::kCast: {
      if (absl::Status s = arity(1); !s.ok()) return s;
      if (n.width < 1 || n.width > kMaxWidth) {
        return absl::InvalidArgumentError(
            fmt::format("cast width {} outside 1..{}", n.width, kMaxWidth));
      }
      const BigInt tmin = TypeMin(n.width, n.is_signed);
      const BigInt tmax = TypeMax(n.width, n.is_signed);
      const bool fits = kids[0].lo >= tmin && kids[0].hi <= tmax;
      info = {fits ? kids[0].lo : tmin, fits ? kids[0].hi : tmax, n.is_signed,
              n.width};
      out[slot].info = info;
      return info;
    }
  }
  info.width = MinWidth(info.lo, info.hi, info.is_signed);
  if (info.width > kMaxWidth) {
    return absl::OutOfRangeError(fmt::format(
        "'{}' needs {} bits for [{}, {}], above {}", NodeLabel(n), info.width,
        Str(info.lo), Str(info.hi), kMaxWidth));
  }
  out[slot].info = info;
  return info;
}

}  // namespace

ExprNode RangeLeaf(std::string name, BigInt lo, BigInt hi) {
  ExprNode n;
  n.name = std::move(name);
  n.lo = std::move(lo);
  n.hi = std::move(hi);
  n.is_signed = n.lo < 0;
  return n;
}

ExprNode DeclaredLeaf(std::string name, int width, bool is_signed) {
  ExprNode n;
  n.name = std::move(name);
  n.width = width;
  n.is_signed = is_signed;
  if (width >= 1 && width <= kMaxWidth) {
    n.lo = TypeMin(width, is_signed);
    n.hi = TypeMax(width, is_signed);
  }
  return n;
}

ExprNode AddNode(ExprNode a, ExprNode b) {
  return Op(ExprNode::Kind::kAdd, {std::move(a), std::move(b)});
}
ExprNode SubNode(ExprNode a, ExprNode b) {
  return Op(ExprNode::Kind::kSub, {std::move(a), std::move(b)});
}
ExprNode MulNode(ExprNode a, ExprNode b) {
  return Op(ExprNode::Kind::kMul, {std::move(a), std::move(b)});
}
ExprNode ShlNode(int k, ExprNode a) {
  ExprNode n = Op(ExprNode::Kind::kShl, {std::move(a)});
  n.shift = k;
  return n;
}
ExprNode ShrNode(int k, ExprNode a) {
  ExprNode n = Op(ExprNode::Kind::kShr, {std::move(a)});
  n.shift = k;
  return n;
}
ExprNode CastNode(int width, bool is_signed, ExprNode a) {
  ExprNode n = Op(ExprNode::Kind::kCast, {std::move(a)});
  n.width = width;
  n.is_signed = is_signed;
  return n;
}

BigInt TypeMin(int width, bool is_signed) {
  return is_signed ? BigInt(-Pow2Int(width - 1)) : BigInt(0);
}

BigInt TypeMax(int width, bool is_signed) {
  return (is_signed ? Pow2Int(width - 1) : Pow2Int(width)) - 1;
}

int MinWidth(const BigInt& lo, const BigInt& hi, bool is_signed) {
  int w = 1;
  while (lo < TypeMin(w, is_signed) || hi > TypeMax(w, is_signed)) ++w;
  return w;
}

absl::StatusOr<std::vector<AnnotatedNode>> InferWidths(const ExprNode& root) {
  std::vector<AnnotatedNode> out;
  absl::StatusOr<WidthInfo> r = Infer(root, 0, out);
  if (!r.ok()) return r.status();
  return out;
}

BigInt EvaluateExpr(const ExprNode& n,
                    const std::map<std::string, BigInt>& env) {
  switch (n.kind) {
    case ExprNode::Kind::kLeaf:
      return env.at(n.name);
    case ExprNode::Kind::kAdd:
      return EvaluateExpr(n.children[0], env) +
             EvaluateExpr(n.children[1], env);
    case ExprNode::Kind::kSub:
      return EvaluateExpr(n.children[0], env) -
             EvaluateExpr(n.children[1], env);
    case ExprNode::Kind::kMul:
      return EvaluateExpr(n.children[0], env) *
             EvaluateExpr(n.children[1], env);
    case ExprNode::Kind::kShl:
      return EvaluateExpr(n.children[0], env) << n.shift;
    case ExprNode::Kind::kShr:
      return FloorShift(EvaluateExpr(n.children[0], env), n.shift);
    case ExprNode::Kind::kCast:
      return Wrap(EvaluateExpr(n.children[0], env), n.width, n.is_signed);
  }
  return 0;
}

std::string NodeLabel(const ExprNode& n) {
  const auto type = [](int w, bool s) {
    return fmt::format("{}{}", s ? 's' : 'u', w);
  };
  switch (n.kind) {
    case ExprNode::Kind::kLeaf:
      if (n.width > 0) return fmt::format("var {} {}", n.name, type(n.width, n.is_signed));
      return fmt::format("range {} {} {}", n.name, Str(n.lo), Str(n.hi));
    case ExprNode::Kind::kAdd:
      return "add";
    case ExprNode::Kind::kSub:
      return "sub";
    case ExprNode::Kind::kMul:
      return "mul";
    case ExprNode::Kind::kShl:
      return fmt::format("shl {}", n.shift);
    case ExprNode::Kind::kShr:
      return fmt::format("shr {}", n.shift);
    case ExprNode::Kind::kCast:
      return fmt::format("cast {}", type(n.width, n.is_signed));
  }
  return "?";
}

std::string WidthReport(const std::vector<AnnotatedNode>& nodes) {
  std::vector<std::array<std::string, 4>> rows = {
      {"node", "interval", "signed", "width"}};
  for (const AnnotatedNode& a : nodes) {
    rows.push_back({std::string(2 * a.depth, ' ') + NodeLabel(*a.node),
                    fmt::format("[{}, {}]", Str(a.info.lo), Str(a.info.hi)),
                    a.info.is_signed ? "yes" : "no",
                    fmt::format("{}", a.info.width)});
  }
  std::array<size_t, 4> w = {};
  for (const auto& r : rows) {
    for (size_t c = 0; c < 4; ++c) w[c] = std::max(w[c], r[c].size());
  }
  std::string out;
  for (const auto& r : rows) {
    out += fmt::format("{:<{}}  {:<{}}  {:>{}}  {:>{}}\n", r[0], w[0], r[1],
                       w[1], r[2], w[2], r[3], w[3]);
  }
  return out;
}

std::string WidthReportCsv(const std::vector<AnnotatedNode>& nodes) {
  std::string out = "depth,node,lo,hi,signed,width\n";
  for (const AnnotatedNode& a : nodes) {
    out += fmt::format("{},{},{},{},{},{}\n", a.depth, NodeLabel(*a.node),
                       Str(a.info.lo), Str(a.info.hi),
                       a.info.is_signed ? 1 : 0, a.info.width);
  }
  return out;
}

}  // namespace qamhls
