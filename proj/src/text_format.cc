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

#include "qamhls/text_format.h"

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "fmt/format.h"

namespace qamhls {
namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::string StripComment(std::string_view line) {
  const size_t hash = line.find('#');
  return std::string(hash == std::string_view::npos ? line
                                                    : line.substr(0, hash));
}

std::vector<std::string> Split(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<Line> Lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::vector<std::string> tokens =
        Split(StripComment(text.substr(start, end - start)));
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return out;
}

absl::Status LineError(int line, std::string_view msg) {
  return absl::InvalidArgumentError(fmt::format("line {}: {}", line, msg));
}

template <typename T>
absl::StatusOr<T> ParseInt(std::string_view s, int line, std::string_view what) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) {
    return LineError(line, fmt::format("bad {} '{}'", what, s));
  }
  return v;
}

absl::StatusOr<Rational> ParseRationalAt(std::string_view s, int line,
                                         std::string_view what) {
  absl::StatusOr<Rational> r = ParseRational(s);
  if (!r.ok()) return LineError(line, fmt::format("bad {} '{}'", what, s));
  return r;
}

absl::StatusOr<bool> ParseBool(std::string_view s, int line) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  return LineError(line, fmt::format("bad boolean '{}'", s));
}

// Splits "key=value"; empty key on failure.
std::pair<std::string, std::string> KeyValue(std::string_view tok) {
  const size_t eq = tok.find('=');
  if (eq == std::string_view::npos || eq == 0) return {};
  return {std::string(tok.substr(0, eq)), std::string(tok.substr(eq + 1))};
}

absl::Status Arity(const Line& l, size_t want) {
  if (l.tokens.size() != want) {
    return LineError(l.number, fmt::format("'{}' takes {} argument(s)",
                                           l.tokens[0], want - 1));
  }
  return absl::OkStatus();
}

#define QAMHLS_RETURN_IF_ERROR(expr)            \
  do {                                          \
    if (absl::Status _s = (expr); !_s.ok()) {   \
      return _s;                                \
    }                                           \
  } while (0)

#define QAMHLS_CONCAT_INNER(a, b) a##b
#define QAMHLS_CONCAT(a, b) QAMHLS_CONCAT_INNER(a, b)
#define QAMHLS_ASSIGN_OR_RETURN(lhs, expr) \
  QAMHLS_ASSIGN_OR_RETURN_IMPL(QAMHLS_CONCAT(_status_or_, __LINE__), lhs, expr)
#define QAMHLS_ASSIGN_OR_RETURN_IMPL(tmp, lhs, expr) \
  auto tmp = (expr);                                  \
  if (!tmp.ok()) return tmp.status();                 \
  lhs = *std::move(tmp)

absl::Status ParseArray(const Line& l, DesignModel& d) {
  if (l.tokens.size() < 3) {
    return LineError(l.number, "array needs a name and a mapping");
  }
  ArrayMapping a;
  a.name = l.tokens[1];
  if (l.tokens[2] == "memory") {
    a.memory = true;
  } else if (l.tokens[2] != "registers") {
    return LineError(l.number, fmt::format("unknown mapping '{}'", l.tokens[2]));
  }
  for (size_t i = 3; i < l.tokens.size(); ++i) {
    const auto [key, value] = KeyValue(l.tokens[i]);
    int64_t* slot = nullptr;
    if (key == "ports" && a.memory) slot = &a.ports;
    if (key == "pack" && a.memory) slot = &a.pack;
    if (key == "words") slot = &a.words;
    if (key == "bits") slot = &a.bits;
    if (slot == nullptr) {
      return LineError(l.number, fmt::format("unknown array key '{}'", l.tokens[i]));
    }
    QAMHLS_ASSIGN_OR_RETURN(*slot, ParseInt<int64_t>(value, l.number, key));
    if (*slot < (key == "ports" || key == "pack" ? 1 : 0)) {
      return LineError(l.number, fmt::format("{} out of range", key));
    }
  }
  if (d.FindArray(a.name) != nullptr) {
    return LineError(l.number, fmt::format("duplicate array '{}'", a.name));
  }
  d.arrays.push_back(std::move(a));
  return absl::OkStatus();
}

absl::Status ParseLoop(const Line& l, DesignModel& d) {
  if (l.tokens.size() < 2) return LineError(l.number, "loop needs a label");
  LoopSpec loop;
  loop.label = l.tokens[1];
  bool have_trips = false;
  bool in_access = false;
  for (size_t i = 2; i < l.tokens.size(); ++i) {
    const std::string& tok = l.tokens[i];
    if (tok == "access") {
      in_access = true;
      continue;
    }
    if (tok == "nomerge" && !in_access) {
      loop.mergeable = false;
      continue;
    }
    const auto [key, value] = KeyValue(tok);
    if (key.empty()) {
      return LineError(l.number, fmt::format("expected key=value, got '{}'", tok));
    }
    if (in_access) {
      if (d.FindArray(key) == nullptr) {
        return LineError(l.number, fmt::format("unknown array '{}'", key));
      }
      ArrayAccess acc{key, 0};
      QAMHLS_ASSIGN_OR_RETURN(acc.count, ParseInt<int64_t>(value, l.number, "access count"));
      if (acc.count < 0) return LineError(l.number, "negative access count");
      loop.accesses.push_back(std::move(acc));
      continue;
    }
    int64_t* slot = nullptr;
    if (key == "trips") slot = &loop.trips;
    if (key == "mults") slot = &loop.mults;
    if (key == "adds") slot = &loop.adds;
    if (slot == nullptr) {
      return LineError(l.number, fmt::format("unknown loop key '{}'", key));
    }
    QAMHLS_ASSIGN_OR_RETURN(*slot, ParseInt<int64_t>(value, l.number, key));
    if (key == "trips") {
      have_trips = true;
      if (*slot < 1) return LineError(l.number, "trips must be >= 1");
    } else if (*slot < 0) {
      return LineError(l.number, fmt::format("{} must be >= 0", key));
    }
  }
  if (!have_trips) return LineError(l.number, "loop needs trips=<int>");
  if (d.FindLoop(loop.label) != nullptr) {
    return LineError(l.number,
                     fmt::format("duplicate loop label '{}'", loop.label));
  }
  d.items.push_back(std::move(loop));
  return absl::OkStatus();
}

// s-expression reader for the expr format.
struct Token {
  std::string text;
  int line;
};

class ExprReader {
 public:
  explicit ExprReader(std::string_view text) {
    int line = 1;
    std::string cur;
    bool comment = false;
    const auto flush = [&] {
      if (!cur.empty()) toks_.push_back({cur, line});
      cur.clear();
    };
    for (char c : text) {
      if (c == '\n') {
        flush();
        comment = false;
        ++line;
      } else if (comment) {
      } else if (c == '#') {
        flush();
        comment = true;
      } else if (c == '(' || c == ')') {
        flush();
        toks_.push_back({std::string(1, c), line});
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        cur += c;
      }
    }
    flush();
    last_line_ = line;
  }

  absl::StatusOr<ExprNode> ReadAll() {
    QAMHLS_ASSIGN_OR_RETURN(ExprNode root, Read());
    if (pos_ != toks_.size()) {
      return LineError(toks_[pos_].line, "trailing input after expression");
    }
    return root;
  }

 private:
  int Line() const {
    return pos_ < toks_.size() ? toks_[pos_].line : last_line_;
  }

  absl::StatusOr<std::string> Atom(std::string_view what) {
    if (pos_ >= toks_.size() || toks_[pos_].text == "(" ||
        toks_[pos_].text == ")") {
      return LineError(Line(), fmt::format("expected {}", what));
    }
    return toks_[pos_++].text;
  }

  absl::Status Expect(std::string_view t) {
    if (pos_ >= toks_.size() || toks_[pos_].text != t) {
      return LineError(Line(), fmt::format("expected '{}'", t));
    }
    ++pos_;
    return absl::OkStatus();
  }

  absl::StatusOr<BigInt> Integer(std::string_view what) {
    const int line = Line();
    QAMHLS_ASSIGN_OR_RETURN(std::string s, Atom(what));
    absl::StatusOr<Rational> r = ParseRational(s);
    if (!r.ok() || denominator(*r) != 1) {
      return LineError(line, fmt::format("bad {} '{}'", what, s));
    }
    return BigInt(numerator(*r));
  }

  // "s17", "u8" or plain "17" (signed).
  absl::StatusOr<std::pair<int, bool>> Type() {
    const int line = Line();
    QAMHLS_ASSIGN_OR_RETURN(std::string s, Atom("type"));
    bool is_signed = true;
    std::string_view digits = s;
    if (!digits.empty() && (digits[0] == 's' || digits[0] == 'u')) {
      is_signed = digits[0] == 's';
      digits.remove_prefix(1);
    }
    QAMHLS_ASSIGN_OR_RETURN(int w, ParseInt<int>(digits, line, "type"));
    if (w < 1 || w > 64) {
      return LineError(line, fmt::format("width {} outside 1..64", w));
    }
    return std::pair{w, is_signed};
  }

  absl::StatusOr<int> Shift() {
    const int line = Line();
    QAMHLS_ASSIGN_OR_RETURN(std::string s, Atom("shift amount"));
    QAMHLS_ASSIGN_OR_RETURN(int k, ParseInt<int>(s, line, "shift amount"));
    if (k < 0 || k > 64) return LineError(line, "shift amount outside 0..64");
    return k;
  }

  absl::StatusOr<ExprNode> Read() {
    QAMHLS_RETURN_IF_ERROR(Expect("("));
    const int line = Line();
    QAMHLS_ASSIGN_OR_RETURN(std::string op, Atom("operator"));
    ExprNode node;
    if (op == "range") {
      QAMHLS_ASSIGN_OR_RETURN(std::string name, Atom("name"));
      QAMHLS_ASSIGN_OR_RETURN(BigInt lo, Integer("bound"));
      QAMHLS_ASSIGN_OR_RETURN(BigInt hi, Integer("bound"));
      if (lo > hi) return LineError(line, "empty range");
      node = RangeLeaf(name, lo, hi);
    } else if (op == "var") {
      QAMHLS_ASSIGN_OR_RETURN(std::string name, Atom("name"));
      QAMHLS_ASSIGN_OR_RETURN(auto type, Type());
      node = DeclaredLeaf(name, type.first, type.second);
    } else if (op == "add" || op == "sub" || op == "mul") {
      QAMHLS_ASSIGN_OR_RETURN(ExprNode a, Read());
      QAMHLS_ASSIGN_OR_RETURN(ExprNode b, Read());
      node = op == "add"   ? AddNode(std::move(a), std::move(b))
             : op == "sub" ? SubNode(std::move(a), std::move(b))
                           : MulNode(std::move(a), std::move(b));
    } else if (op == "shl" || op == "shr") {
      QAMHLS_ASSIGN_OR_RETURN(int k, Shift());
      QAMHLS_ASSIGN_OR_RETURN(ExprNode a, Read());
      node = op == "shl" ? ShlNode(k, std::move(a)) : ShrNode(k, std::move(a));
    } else if (op == "cast") {
      QAMHLS_ASSIGN_OR_RETURN(auto type, Type());
      QAMHLS_ASSIGN_OR_RETURN(ExprNode a, Read());
      node = CastNode(type.first, type.second, std::move(a));
    } else {
      return LineError(line, fmt::format("unknown operator '{}'", op));
    }
    QAMHLS_RETURN_IF_ERROR(Expect(")"));
    return node;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int last_line_ = 1;
};

}  // namespace

absl::StatusOr<DesignModel> ParseDesign(std::string_view text) {
  DesignModel d;
  std::set<std::string> seen;
  for (const Line& l : Lines(text)) {
    const std::string& key = l.tokens[0];
    const bool once = key == "design" || key == "clock_ns" ||
                      key == "bits_per_output" || key == "overhead_cycles";
    if (once && !seen.insert(key).second) {
      return LineError(l.number, fmt::format("'{}' given twice", key));
    }
    if (key == "design") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
      d.name = l.tokens[1];
    } else if (key == "clock_ns") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
      QAMHLS_ASSIGN_OR_RETURN(d.clock_ns, ParseRationalAt(l.tokens[1], l.number, "clock"));
      if (d.clock_ns <= 0) return LineError(l.number, "clock must be positive");
    } else if (key == "bits_per_output") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
      QAMHLS_ASSIGN_OR_RETURN(d.bits_per_output, ParseInt<int64_t>(l.tokens[1], l.number, key));
      if (d.bits_per_output < 1) return LineError(l.number, "bits_per_output must be >= 1");
    } else if (key == "overhead_cycles") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
      QAMHLS_ASSIGN_OR_RETURN(d.overhead_cycles, ParseInt<int64_t>(l.tokens[1], l.number, key));
      if (d.overhead_cycles < 0) return LineError(l.number, "overhead_cycles must be >= 0");
    } else if (key == "array") {
      QAMHLS_RETURN_IF_ERROR(ParseArray(l, d));
    } else if (key == "loop") {
      QAMHLS_RETURN_IF_ERROR(ParseLoop(l, d));
    } else if (key == "barrier") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 1));
      d.items.push_back(Barrier{});
    } else {
      return LineError(l.number, fmt::format("unknown directive '{}'", key));
    }
  }
  if (d.loops().empty()) return absl::InvalidArgumentError("no loops");
  QAMHLS_RETURN_IF_ERROR(ValidateDesign(d));
  return d;
}

std::string RenderDesign(const DesignModel& d) {
  std::string out;
  if (!d.name.empty()) out += fmt::format("design {}\n", d.name);
  out += fmt::format("clock_ns {}\n", ToDecimalString(d.clock_ns));
  out += fmt::format("bits_per_output {}\n", d.bits_per_output);
  out += fmt::format("overhead_cycles {}\n", d.overhead_cycles);
  for (const ArrayMapping& a : d.arrays) {
    out += fmt::format("array {} ", a.name);
    out += a.memory ? fmt::format("memory ports={} pack={}", a.ports, a.pack)
                    : std::string("registers");
    if (a.words != 0 || a.bits != 0) {
      out += fmt::format(" words={} bits={}", a.words, a.bits);
    }
    out += "\n";
  }
  for (const DesignItem& item : d.items) {
    const auto* loop = std::get_if<LoopSpec>(&item);
    if (loop == nullptr) {
      out += "barrier\n";
      continue;
    }
    out += fmt::format("loop {} trips={} mults={} adds={}", loop->label,
                       loop->trips, loop->mults, loop->adds);
    if (!loop->mergeable) out += " nomerge";
    if (!loop->accesses.empty()) {
      out += " access";
      for (const ArrayAccess& a : loop->accesses) {
        out += fmt::format(" {}={}", a.array, a.count);
      }
    }
    out += "\n";
  }
  return out;
}

absl::StatusOr<ArchConfig> ParseArch(std::string_view text,
                                     const DesignModel* design) {
  ArchConfig arch;
  const auto check_label = [&](const Line& l,
                               const std::string& label) -> absl::Status {
    if (design != nullptr && design->FindLoop(label) == nullptr) {
      return LineError(l.number, fmt::format("unknown loop '{}'", label));
    }
    return absl::OkStatus();
  };
  bool named = false;
  for (const Line& l : Lines(text)) {
    const std::string& key = l.tokens[0];
    if (key == "arch") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
      if (named) return LineError(l.number, "'arch' given twice");
      named = true;
      arch.name = l.tokens[1];
    } else if (key == "merge") {
      if (l.tokens.size() < 2) return LineError(l.number, "merge needs labels");
      for (size_t i = 1; i < l.tokens.size(); ++i) {
        QAMHLS_RETURN_IF_ERROR(check_label(l, l.tokens[i]));
        arch.loops[l.tokens[i]].merge = true;
      }
    } else if (key == "unroll") {
      QAMHLS_RETURN_IF_ERROR(Arity(l, 3));
      QAMHLS_RETURN_IF_ERROR(check_label(l, l.tokens[1]));
      LoopDirective& d = arch.loops[l.tokens[1]];
      if (l.tokens[2] == "full") {
        d.unroll_full = true;
        d.unroll = 1;
      } else {
        QAMHLS_ASSIGN_OR_RETURN(d.unroll, ParseInt<int64_t>(l.tokens[2], l.number, "unroll factor"));
        if (d.unroll < 1) {
          return LineError(l.number, "unroll factor must be >= 1 or 'full'");
        }
        d.unroll_full = false;
      }
    } else if (key == "pipeline") {
      if (l.tokens.size() != 4) {
        return LineError(l.number, "pipeline takes <label> ii=<int> depth=<int>");
      }
      QAMHLS_RETURN_IF_ERROR(check_label(l, l.tokens[1]));
      PipelineDirective p;
      bool have_ii = false;
      bool have_depth = false;
      for (size_t i = 2; i < 4; ++i) {
        const auto [k, v] = KeyValue(l.tokens[i]);
        if (k == "ii") {
          QAMHLS_ASSIGN_OR_RETURN(p.ii, ParseInt<int64_t>(v, l.number, "ii"));
          have_ii = true;
        } else if (k == "depth") {
          QAMHLS_ASSIGN_OR_RETURN(p.depth, ParseInt<int64_t>(v, l.number, "depth"));
          have_depth = true;
        } else {
          return LineError(l.number, fmt::format("unknown pipeline key '{}'", l.tokens[i]));
        }
      }
      if (!have_ii || !have_depth) {
        return LineError(l.number, "pipeline needs ii= and depth=");
      }
      if (p.ii < 1 || p.depth < 1) {
        return LineError(l.number, "ii and depth must be >= 1");
      }
      arch.loops[l.tokens[1]].pipeline = p;
    } else {
      return LineError(l.number, fmt::format("unknown directive '{}'", key));
    }
  }
  if (design != nullptr) QAMHLS_RETURN_IF_ERROR(ValidateArch(*design, arch));
  return arch;
}

std::string RenderArch(const ArchConfig& arch) {
  std::string out;
  if (!arch.name.empty()) out += fmt::format("arch {}\n", arch.name);
  std::string merged;
  for (const auto& [label, d] : arch.loops) {
    if (d.merge) merged += " " + label;
  }
  if (!merged.empty()) out += "merge" + merged + "\n";
  for (const auto& [label, d] : arch.loops) {
    if (d.unroll_full) {
      out += fmt::format("unroll {} full\n", label);
    } else if (d.unroll != 1) {
      out += fmt::format("unroll {} {}\n", label, d.unroll);
    }
    if (d.pipeline) {
      out += fmt::format("pipeline {} ii={} depth={}\n", label, d.pipeline->ii,
                         d.pipeline->depth);
    }
  }
  return out;
}

absl::StatusOr<TrialSpec> ParseTrial(std::string_view text) {
  TrialSpec t;
  std::set<std::string> seen;
  bool have_taps = false;
  for (const Line& l : Lines(text)) {
    const std::string& key = l.tokens[0];
    if (!seen.insert(key).second) {
      return LineError(l.number, fmt::format("'{}' given twice", key));
    }
    if (key == "taps") {
      // Rejoin so "1.05, 0; 0.05,0" style spacing is accepted.
      std::string rest;
      for (size_t i = 1; i < l.tokens.size(); ++i) rest += l.tokens[i];
      if (rest.empty()) return LineError(l.number, "taps needs values");
      size_t start = 0;
      while (start <= rest.size()) {
        size_t end = rest.find(';', start);
        if (end == std::string::npos) end = rest.size();
        const std::string tap = rest.substr(start, end - start);
        start = end + 1;
        if (tap.empty()) {
          if (end == rest.size()) break;
          return LineError(l.number, "empty tap");
        }
        const size_t comma = tap.find(',');
        ComplexRational c;
        QAMHLS_ASSIGN_OR_RETURN(c.re, ParseRationalAt(tap.substr(0, comma), l.number, "tap"));
        if (comma != std::string::npos) {
          QAMHLS_ASSIGN_OR_RETURN(c.im, ParseRationalAt(tap.substr(comma + 1), l.number, "tap"));
        }
        t.channel.taps.push_back(std::move(c));
      }
      have_taps = true;
      continue;
    }
    QAMHLS_RETURN_IF_ERROR(Arity(l, 2));
    const std::string& v = l.tokens[1];
    if (key == "noise_sigma") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.noise_sigma, ParseRationalAt(v, l.number, key));
      if (t.channel.noise_sigma < 0) return LineError(l.number, "noise_sigma must be >= 0");
    } else if (key == "seed") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.seed, ParseInt<uint64_t>(v, l.number, key));
    } else if (key == "train") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.n_train, ParseInt<int64_t>(v, l.number, key));
      if (t.channel.n_train < 0) return LineError(l.number, "train must be >= 0");
    } else if (key == "measure") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.n_measure, ParseInt<int64_t>(v, l.number, key));
      if (t.channel.n_measure < 0) return LineError(l.number, "measure must be >= 0");
    } else if (key == "block_size") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.block_size, ParseInt<int64_t>(v, l.number, key));
      if (t.channel.block_size < 1) return LineError(l.number, "block_size must be >= 1");
    } else if (key == "max_ser") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.max_ser, ParseInt<double>(v, l.number, key));
      if (!(t.channel.max_ser > 0)) return LineError(l.number, "max_ser must be > 0");
    } else if (key == "require_converged") {
      QAMHLS_ASSIGN_OR_RETURN(t.channel.require_converged, ParseBool(v, l.number));
    } else if (key == "coef_update") {
      if (v == "trn") {
        t.decoder.coef_quant = Quant::kTrn;
      } else if (v == "rnd") {
        t.decoder.coef_quant = Quant::kRnd;
      } else {
        return LineError(l.number, fmt::format("coef_update must be trn or rnd, got '{}'", v));
      }
    } else {
      return LineError(l.number, fmt::format("unknown directive '{}'", key));
    }
  }
  if (!have_taps) return absl::InvalidArgumentError("trial has no taps");
  QAMHLS_RETURN_IF_ERROR(ValidateChannel(t.channel));
  return t;
}

std::string RenderTrial(const TrialSpec& t) {
  const ChannelConfig& c = t.channel;
  std::string taps;
  for (size_t i = 0; i < c.taps.size(); ++i) {
    taps += fmt::format("{}{},{}", i ? "; " : "", ToDecimalString(c.taps[i].re),
                        ToDecimalString(c.taps[i].im));
  }
  std::string out = fmt::format("taps {}\n", taps);
  out += fmt::format("noise_sigma {}\n", ToDecimalString(c.noise_sigma));
  out += fmt::format("seed {}\n", c.seed);
  out += fmt::format("train {}\n", c.n_train);
  out += fmt::format("measure {}\n", c.n_measure);
  out += fmt::format("block_size {}\n", c.block_size);
  out += fmt::format("max_ser {}\n", c.max_ser);
  out += fmt::format("require_converged {}\n",
                     c.require_converged ? "true" : "false");
  out += fmt::format("coef_update {}\n",
                     t.decoder.coef_quant == Quant::kRnd ? "rnd" : "trn");
  return out;
}

absl::StatusOr<ExprNode> ParseExpr(std::string_view text) {
  return ExprReader(text).ReadAll();
}

std::string RenderExpr(const ExprNode& n) {
  if (n.kind == ExprNode::Kind::kLeaf) return "(" + NodeLabel(n) + ")";
  std::string out = "(" + NodeLabel(n);
  for (const ExprNode& c : n.children) out += " " + RenderExpr(c);
  return out + ")";
}

}  // namespace qamhls
