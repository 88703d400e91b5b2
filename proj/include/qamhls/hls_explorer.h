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

#ifndef QAMHLS_HLS_EXPLORER_H_
#define QAMHLS_HLS_EXPLORER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "qamhls/rational.h"

namespace qamhls {

// Where an array lives. Register arrays never limit a loop; memories allow
// ports * pack accesses per cycle.
struct ArrayMapping {
  std::string name;
  bool memory = false;
  int64_t ports = 1;
  int64_t pack = 1;
  // Storage size, used for the register-bit area term (0 if unknown).
  int64_t words = 0;
  int64_t bits = 0;

  int64_t register_bits() const { return memory ? 0 : words * bits; }
  friend bool operator==(const ArrayMapping&, const ArrayMapping&) = default;
};

struct ArrayAccess {
  std::string array;
  int64_t count = 0;
  friend bool operator==(const ArrayAccess&, const ArrayAccess&) = default;
};

struct LoopSpec {
  std::string label;
  int64_t trips = 1;
  // Per-iteration operator usage.
  int64_t mults = 0;
  int64_t adds = 0;
  std::vector<ArrayAccess> accesses;
  bool mergeable = true;
  friend bool operator==(const LoopSpec&, const LoopSpec&) = default;
};

struct Barrier {
  friend bool operator==(const Barrier&, const Barrier&) = default;
};

using DesignItem = std::variant<LoopSpec, Barrier>;

struct DesignModel {
  std::string name;
  Rational clock_ns = 10;
  int64_t bits_per_output = 6;
  int64_t overhead_cycles = 3;
  std::vector<ArrayMapping> arrays;
  std::vector<DesignItem> items;

  std::vector<const LoopSpec*> loops() const;
  const LoopSpec* FindLoop(std::string_view label) const;
  const ArrayMapping* FindArray(std::string_view name) const;
  int64_t register_bits() const;
  friend bool operator==(const DesignModel&, const DesignModel&) = default;
};

// Checks trip counts, resource counts, array references, label uniqueness.
absl::Status ValidateDesign(const DesignModel& design);

struct PipelineDirective {
  int64_t ii = 1;
  int64_t depth = 1;
  friend bool operator==(const PipelineDirective&,
                         const PipelineDirective&) = default;
};

struct LoopDirective {
  bool merge = false;
  // Unroll factor; ignored when full.
  int64_t unroll = 1;
  bool unroll_full = false;
  std::optional<PipelineDirective> pipeline;
  friend bool operator==(const LoopDirective&, const LoopDirective&) = default;
};

struct ArchConfig {
  std::string name;
  // Loops without an entry use the default directive (no merge, U=1).
  std::map<std::string, LoopDirective> loops;

  const LoopDirective& For(const std::string& label) const;
  friend bool operator==(const ArchConfig&, const ArchConfig&) = default;
};

// Every named loop must exist in the design; U, II and depth must be >= 1.
absl::Status ValidateArch(const DesignModel& design, const ArchConfig& arch);

// The unroll factor actually applied: U capped at N, full unroll -> N.
int64_t AppliedUnroll(const LoopSpec& loop, const LoopDirective& d);

// ceil(N / U); full unroll -> 1.
int64_t EffectiveTrip(int64_t trips, int64_t unroll);

// max(1, ceil(accesses * U / (ports * pack))) over memory-mapped arrays.
int64_t IterationCycles(const LoopSpec& loop, int64_t unroll,
                        const DesignModel& design);

// (effective_trip - 1) * II + D.
int64_t PipelineLatency(int64_t effective_trip, int64_t ii, int64_t depth);

struct LoopGroup {
  std::vector<std::string> labels;
  std::vector<int64_t> effective_trips;
  std::vector<int64_t> cycles_per_loop;
  int64_t latency = 0;
  bool pipelined = false;
  // Concurrent operators in this group.
  int64_t mults = 0;
  int64_t adds = 0;
};

// Maximal runs of merge-enabled, mergeable loops not crossing a barrier.
std::vector<std::vector<const LoopSpec*>> MergeGroups(const DesignModel& design,
                                                      const ArchConfig& arch);

struct AreaWeights {
  double mult = 1.0;
  double add = 0.15;
  double register_bit = 0.02;
};

struct DesignReport {
  std::string config_id;
  int64_t latency_cycles = 0;
  Rational latency_ns = 0;
  double mbaud = 0;
  double mbps = 0;
  int64_t mults = 0;
  int64_t adds = 0;
  int64_t register_bits = 0;
  double area = 0;
  // area / area of the same design with no merging and no unrolling.
  double relative_area = 0;
  std::vector<LoopGroup> groups;
};

struct DataRate {
  Rational latency_ns;
  double mbaud;
  double mbps;
};

DataRate ComputeDataRate(int64_t latency_cycles, const Rational& clock_ns,
                         int64_t bits_per_output);

// True when the computed data rate reaches target_mbps.
bool MeetsRate(const DesignReport& report, double target_mbps);

double AreaEstimate(int64_t mults, int64_t adds, int64_t register_bits,
                    const AreaWeights& w = {});

// Full evaluation. clock_ns overrides the design's clock when given.
absl::StatusOr<DesignReport> Evaluate(
    const DesignModel& design, const ArchConfig& arch,
    std::optional<Rational> clock_ns = std::nullopt,
    const AreaWeights& weights = {});

// Aligned table / CSV with columns config_id, latency_cycles, latency_ns,
// mbaud, mbps, rel_area. A meets_target column is added when a target is set.
std::string ReportTable(const std::vector<DesignReport>& reports,
                        std::optional<double> target_mbps = std::nullopt);
std::string ReportCsv(const std::vector<DesignReport>& reports,
                      std::optional<double> target_mbps = std::nullopt);
// Per-group schedule listing.
std::string ScheduleListing(const DesignReport& report);

}  // namespace qamhls

#endif  // QAMHLS_HLS_EXPLORER_H_
