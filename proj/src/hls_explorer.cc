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

#include "qamhls/hls_explorer.h"

#include <algorithm>
#include <set>

#include "fmt/format.h"

namespace qamhls {
namespace {

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

const LoopDirective& DefaultDirective() {
  static const LoopDirective* const d = new LoopDirective();
  return *d;
}

// Pads each column to its widest cell; first column left aligned, and the
// last one too when it holds free text.
std::string AlignedTable(const std::vector<std::vector<std::string>>& rows,
                         bool text_last = false) {
  std::vector<size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (size_t c = 0; c < row.size(); ++c) {
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (size_t c = 0; c < row.size(); ++c) {
      if (c == 0) {
        line += fmt::format("{:<{}}", row[c], width[c]);
      } else if (text_last && c + 1 == row.size()) {
        line += "  " + row[c];
      } else {
        line += fmt::format("  {:>{}}", row[c], width[c]);
      }
    }
    out += line + "\n";
  }
  return out;
}

std::vector<std::vector<std::string>> ReportRows(
    const std::vector<DesignReport>& reports,
    std::optional<double> target_mbps) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header = {"config_id", "latency_cycles",
                                     "latency_ns", "mbaud", "mbps", "rel_area"};
  if (target_mbps) header.push_back("meets_target");
  rows.push_back(header);
  for (const DesignReport& r : reports) {
    std::vector<std::string> row = {
        r.config_id,
        fmt::format("{}", r.latency_cycles),
        ToDecimalString(r.latency_ns),
        fmt::format("{:.2f}", r.mbaud),
        fmt::format("{:.2f}", r.mbps),
        fmt::format("{:.3f}", r.relative_area)};
    if (target_mbps) row.push_back(MeetsRate(r, *target_mbps) ? "yes" : "no");
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::vector<const LoopSpec*> DesignModel::loops() const {
  std::vector<const LoopSpec*> out;
  for (const DesignItem& item : items) {
    if (const auto* loop = std::get_if<LoopSpec>(&item)) out.push_back(loop);
  }
  return out;
}

const LoopSpec* DesignModel::FindLoop(std::string_view label) const {
  for (const LoopSpec* loop : loops()) {
    if (loop->label == label) return loop;
  }
  return nullptr;
}

const ArrayMapping* DesignModel::FindArray(std::string_view name) const {
  for (const ArrayMapping& a : arrays) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

int64_t DesignModel::register_bits() const {
  int64_t bits = 0;
  for (const ArrayMapping& a : arrays) bits += a.register_bits();
  return bits;
}

absl::Status ValidateDesign(const DesignModel& design) {
  if (design.clock_ns <= 0) {
    return absl::InvalidArgumentError("clock period must be positive");
  }
  if (design.bits_per_output < 1) {
    return absl::InvalidArgumentError("bits_per_output must be positive");
  }
  if (design.overhead_cycles < 0) {
    return absl::InvalidArgumentError("overhead_cycles must be nonnegative");
  }
  std::set<std::string> names;
  for (const ArrayMapping& a : design.arrays) {
    if (!names.insert(a.name).second) {
      return absl::InvalidArgumentError(
          fmt::format("duplicate array '{}'", a.name));
    }
    if (a.ports < 1 || a.pack < 1 || a.words < 0 || a.bits < 0) {
      return absl::InvalidArgumentError(
          fmt::format("array '{}': ports and pack must be >= 1", a.name));
    }
  }
  std::set<std::string> labels;
  for (const LoopSpec* loop : design.loops()) {
    if (!labels.insert(loop->label).second) {
      return absl::InvalidArgumentError(
          fmt::format("duplicate loop label '{}'", loop->label));
    }
    if (loop->trips < 1) {
      return absl::InvalidArgumentError(
          fmt::format("loop '{}': trips must be >= 1", loop->label));
    }
    if (loop->mults < 0 || loop->adds < 0) {
      return absl::InvalidArgumentError(
          fmt::format("loop '{}': negative resource count", loop->label));
    }
    for (const ArrayAccess& acc : loop->accesses) {
      if (design.FindArray(acc.array) == nullptr) {
        return absl::InvalidArgumentError(fmt::format(
            "loop '{}': unknown array '{}'", loop->label, acc.array));
      }
      if (acc.count < 0) {
        return absl::InvalidArgumentError(
            fmt::format("loop '{}': negative access count", loop->label));
      }
    }
  }
  return absl::OkStatus();
}

const LoopDirective& ArchConfig::For(const std::string& label) const {
  auto it = loops.find(label);
  return it == loops.end() ? DefaultDirective() : it->second;
}

absl::Status ValidateArch(const DesignModel& design, const ArchConfig& arch) {
  for (const auto& [label, d] : arch.loops) {
    if (design.FindLoop(label) == nullptr) {
      return absl::InvalidArgumentError(
          fmt::format("unknown loop '{}'", label));
    }
    if (!d.unroll_full && d.unroll < 1) {
      return absl::InvalidArgumentError(
          fmt::format("loop '{}': unroll factor must be >= 1", label));
    }
    if (d.pipeline && (d.pipeline->ii < 1 || d.pipeline->depth < 1)) {
      return absl::InvalidArgumentError(
          fmt::format("loop '{}': pipeline ii and depth must be >= 1", label));
    }
  }
  return absl::OkStatus();
}

int64_t AppliedUnroll(const LoopSpec& loop, const LoopDirective& d) {
  if (d.unroll_full) return loop.trips;
  return std::min(d.unroll, loop.trips);
}

int64_t EffectiveTrip(int64_t trips, int64_t unroll) {
  return CeilDiv(trips, std::min(unroll, trips));
}

int64_t IterationCycles(const LoopSpec& loop, int64_t unroll,
                        const DesignModel& design) {
  int64_t cycles = 1;
  for (const ArrayAccess& acc : loop.accesses) {
    const ArrayMapping* a = design.FindArray(acc.array);
    if (a == nullptr || !a->memory) continue;
    cycles = std::max(cycles, CeilDiv(acc.count * unroll, a->ports * a->pack));
  }
  return cycles;
}

int64_t PipelineLatency(int64_t effective_trip, int64_t ii, int64_t depth) {
  return (effective_trip - 1) * ii + depth;
}

std::vector<std::vector<const LoopSpec*>> MergeGroups(const DesignModel& design,
                                                      const ArchConfig& arch) {
  std::vector<std::vector<const LoopSpec*>> groups;
  bool open = false;  // last group may absorb the next mergeable loop
  for (const DesignItem& item : design.items) {
    const auto* loop = std::get_if<LoopSpec>(&item);
    if (loop == nullptr) {
      open = false;
      continue;
    }
    const bool merges = loop->mergeable && arch.For(loop->label).merge;
    if (merges && open) {
      groups.back().push_back(loop);
    } else {
      groups.push_back({loop});
    }
    open = merges;
  }
  return groups;
}

DataRate ComputeDataRate(int64_t latency_cycles, const Rational& clock_ns,
                         int64_t bits_per_output) {
  DataRate r;
  r.latency_ns = Rational(latency_cycles) * clock_ns;
  r.mbaud = latency_cycles > 0 ? ToDouble(Rational(1000) / r.latency_ns) : 0;
  r.mbps = latency_cycles > 0
               ? ToDouble(Rational(1000 * bits_per_output) / r.latency_ns)
               : 0;
  return r;
}

bool MeetsRate(const DesignReport& report, double target_mbps) {
  // mbps is the rounded value of an exact ratio, so 30.0 stays 30.0.
  return report.mbps >= target_mbps;
}

double AreaEstimate(int64_t mults, int64_t adds, int64_t register_bits,
                    const AreaWeights& w) {
  return w.mult * static_cast<double>(mults) +
         w.add * static_cast<double>(adds) +
         w.register_bit * static_cast<double>(register_bits);
}

absl::StatusOr<DesignReport> Evaluate(const DesignModel& design,
                                      const ArchConfig& arch,
                                      std::optional<Rational> clock_ns,
                                      const AreaWeights& weights) {
  if (absl::Status s = ValidateDesign(design); !s.ok()) return s;
  if (absl::Status s = ValidateArch(design, arch); !s.ok()) return s;
  const Rational clock = clock_ns.value_or(design.clock_ns);
  if (clock <= 0) {
    return absl::InvalidArgumentError("clock period must be positive");
  }

  DesignReport report;
  report.config_id = arch.name;
  int64_t body = 0;
  for (const auto& members : MergeGroups(design, arch)) {
    LoopGroup g;
    for (const LoopSpec* loop : members) {
      const LoopDirective& d = arch.For(loop->label);
      if (d.pipeline && members.size() > 1) {
        return absl::UnimplementedError(fmt::format(
            "loop '{}' is pipelined inside a merged group; merge it off or "
            "drop the pipeline directive",
            loop->label));
      }
      const int64_t u = AppliedUnroll(*loop, d);
      const int64_t trip = EffectiveTrip(loop->trips, u);
      const int64_t ic = IterationCycles(*loop, u, design);
      int64_t cycles = trip * ic;
      if (d.pipeline) {
        // A memory bottleneck also bounds the initiation interval.
        cycles = PipelineLatency(trip, std::max(d.pipeline->ii, ic),
                                 d.pipeline->depth);
        g.pipelined = true;
      }
      g.labels.push_back(loop->label);
      g.effective_trips.push_back(trip);
      g.cycles_per_loop.push_back(cycles);
      g.latency = std::max(g.latency, cycles);
      g.mults += loop->mults * u;
      g.adds += loop->adds * u;
    }
    body += g.latency;
    report.mults = std::max(report.mults, g.mults);
    report.adds = std::max(report.adds, g.adds);
    report.groups.push_back(std::move(g));
  }
  report.latency_cycles = design.overhead_cycles + body;
  const DataRate rate =
      ComputeDataRate(report.latency_cycles, clock, design.bits_per_output);
  report.latency_ns = rate.latency_ns;
  report.mbaud = rate.mbaud;
  report.mbps = rate.mbps;
  report.register_bits = design.register_bits();
  report.area =
      AreaEstimate(report.mults, report.adds, report.register_bits, weights);

  // Baseline: every loop alone, not unrolled.
  int64_t base_mults = 0;
  int64_t base_adds = 0;
  for (const LoopSpec* loop : design.loops()) {
    base_mults = std::max(base_mults, loop->mults);
    base_adds = std::max(base_adds, loop->adds);
  }
  const double base =
      AreaEstimate(base_mults, base_adds, report.register_bits, weights);
  report.relative_area = base > 0 ? report.area / base : 1.0;
  return report;
}

std::string ReportTable(const std::vector<DesignReport>& reports,
                        std::optional<double> target_mbps) {
  return AlignedTable(ReportRows(reports, target_mbps));
}

std::string ReportCsv(const std::vector<DesignReport>& reports,
                      std::optional<double> target_mbps) {
  std::string out;
  for (const auto& row : ReportRows(reports, target_mbps)) {
    for (size_t c = 0; c < row.size(); ++c) {
      out += (c == 0 ? "" : ",") + row[c];
    }
    out += "\n";
  }
  return out;
}

std::string ScheduleListing(const DesignReport& report) {
  std::vector<std::vector<std::string>> rows = {
      {"group", "start", "cycles", "loops"}};
  int64_t start = 0;
  for (size_t i = 0; i < report.groups.size(); ++i) {
    const LoopGroup& g = report.groups[i];
    std::string loops;
    for (size_t k = 0; k < g.labels.size(); ++k) {
      loops += fmt::format("{}{}(trip {}, {} cy)", k ? " " : "", g.labels[k],
                           g.effective_trips[k], g.cycles_per_loop[k]);
    }
    rows.push_back({fmt::format("{}", i), fmt::format("{}", start),
                    fmt::format("{}", g.latency), loops});
    start += g.latency;
  }
  std::string out = fmt::format("# {}\n", report.config_id);
  out += AlignedTable(rows, /*text_last=*/true);
  out += fmt::format("overhead + groups = {} cycles\n", report.latency_cycles);
  return out;
}

}  // namespace qamhls
