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

// Runs the project acceptance checks and prints one PASS/FAIL line for each.
// With arguments, only the listed check numbers run.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fmt/format.h"
#include "oracle/decoder_oracle.h"
#include "oracle/fixed_point_oracle.h"
#include "qamhls/channel_sim.h"
#include "qamhls/hls_explorer.h"
#include "qamhls/qam_decoder.h"
#include "qamhls/reference_decoder.h"
#include "qamhls/text_format.h"
#include "qamhls/width_inference.h"
#include "support/random_models.h"

namespace qamhls {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed expectation; keeps the first message.
  void Expect(bool ok, const std::string& what) {
    if (ok) return;
    if (pass) detail = what;
    pass = false;
  }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string Data(const std::string& name) {
  return ReadFile(std::string(QAMHLS_DATA_DIR) + "/" + name);
}

// Rows in increasing-resource order: none, all-merge, merge+U2, merge+U2/U4.
struct BundledRows {
  std::vector<DesignReport> rows;
  std::string error;
};

BundledRows EvaluateBundled() {
  BundledRows t;
  absl::StatusOr<DesignModel> design = ParseDesign(Data("qam.design"));
  if (!design.ok()) {
    t.error = std::string(design.status().message());
    return t;
  }
  for (const char* file : {"none.arch", "merge_all.arch",
                           "merge_u2.arch", "merge_u2_u4.arch"}) {
    absl::StatusOr<ArchConfig> arch = ParseArch(Data(file), &*design);
    if (!arch.ok()) {
      t.error = fmt::format("{}: {}", file, std::string(arch.status().message()));
      return t;
    }
    absl::StatusOr<DesignReport> r = Evaluate(*design, *arch);
    if (!r.ok()) {
      t.error = fmt::format("{}: {}", file, std::string(r.status().message()));
      return t;
    }
    t.rows.push_back(*r);
  }
  return t;
}

Outcome LatencyReproduction() {
  Outcome o;
  const BundledRows t = EvaluateBundled();
  o.Expect(t.error.empty(), t.error);
  if (!o.pass) return o;
  const int64_t cycles[] = {69, 35, 19, 15};
  std::string got;
  for (size_t i = 0; i < 4; ++i) {
    const DesignReport& r = t.rows[i];
    const std::string ns = ToDecimalString(r.latency_ns);
    got += fmt::format(" {}/{}ns", r.latency_cycles, ns);
    o.Expect(r.latency_cycles == cycles[i] &&
                 r.latency_ns == Rational(cycles[i] * 10),
             fmt::format("{}: {} cycles {} ns", r.config_id, r.latency_cycles,
                         ns));
  }
  if (o.pass) o.detail = "latencies" + got;
  return o;
}

Outcome DataRates() {
  Outcome o;
  const BundledRows t = EvaluateBundled();
  o.Expect(t.error.empty(), t.error);
  if (!o.pass) return o;
  const double published[] = {8.6, 17.1, 31.5, 40.0};
  std::string got;
  for (size_t i = 0; i < 4; ++i) {
    got += fmt::format(" {:.2f}", t.rows[i].mbps);
    o.Expect(std::abs(t.rows[i].mbps - published[i]) <= 0.15,
             fmt::format("{}: {:.3f} Mbps vs {}", t.rows[i].config_id,
                         t.rows[i].mbps, published[i]));
  }
  if (o.pass) o.detail = "Mbps" + got;
  return o;
}

Outcome AreaOrdering() {
  Outcome o;
  const BundledRows t = EvaluateBundled();
  o.Expect(t.error.empty(), t.error);
  if (!o.pass) return o;
  std::string got;
  for (size_t i = 0; i < 4; ++i) {
    got += fmt::format(" {:.3f}", t.rows[i].relative_area);
    if (i > 0) {
      o.Expect(t.rows[i].area > t.rows[i - 1].area,
               fmt::format("{} not above {}", t.rows[i].config_id,
                           t.rows[i - 1].config_id));
    }
  }
  if (o.pass) o.detail = "relative area" + got;
  return o;
}

Outcome ThroughputGoal() {
  Outcome o;
  const BundledRows t = EvaluateBundled();
  o.Expect(t.error.empty(), t.error);
  if (!o.pass) return o;
  for (const DesignReport& r : t.rows) {
    o.Expect(MeetsRate(r, 30.0) == (r.latency_cycles <= 20),
             fmt::format("{}: {} cycles, meets={}", r.config_id,
                         r.latency_cycles, MeetsRate(r, 30.0)));
  }
  o.Expect(MeetsRate(t.rows[2], 30.0), "19-cycle config should meet 30 Mbps");
  o.Expect(!MeetsRate(t.rows[1], 30.0), "35-cycle config should miss 30 Mbps");
  if (o.pass) o.detail = "19 cycles meets 30 Mbps, 35 cycles does not";
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  const int threads =
      std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  const oracle::SweepReport r = oracle::RunExhaustiveSweep(8, threads);
  o.Expect(r.mismatches == 0,
           fmt::format("{} mismatches, first: {}", r.mismatches,
                       r.examples.empty() ? "" : r.examples.front()));
  o.Expect(r.convert_checks > 0 && r.add_checks > 0 && r.sub_checks > 0 &&
               r.mul_checks > 0 && r.shift_checks > 0,
           "an operation was not exercised");
  if (o.pass) {
    o.detail = fmt::format("{} checks, 0 mismatches", r.total_checks());
  }
  return o;
}

Outcome SlicerRoundTrip() {
  Outcome o;
  const DecoderParams p;
  for (int s = 0; s < kNumSymbols; ++s) {
    const int got = Slice(MapSymbol(s, p), p).symbol;
    o.Expect(got == s, fmt::format("symbol {} sliced to {}", s, got));
  }
  if (o.pass) o.detail = "64/64 symbols";
  return o;
}

Outcome GoldenTrace() {
  Outcome o;
  const std::string golden = ReadFile(std::string(QAMHLS_GOLDEN_DIR) +
                                      "/decoder_zero_input_10.trace");
  o.Expect(!golden.empty(), "golden file missing");
  o.Expect(golden == oracle::ZeroInputGoldenTrace(10),
           "golden file differs from the rational oracle");

  QamDecoder d = *QamDecoder::Create(DecoderParams{});
  const DecoderParams& p = d.params();
  const std::array<CFx, 2> zeros = {CFx(p.x_format()), CFx(p.x_format())};
  std::string trace;
  for (int n = 1; n <= 10; ++n) {
    const StepResult r = d.Step(zeros);
    if (n == 1) {
      o.Expect(r.symbol == 55, fmt::format("first symbol {}", r.symbol));
      const Rational sixteenth(-1, 16);
      o.Expect(r.sv0.re().ToRational() == sixteenth &&
                   r.sv0.im().ToRational() == sixteenth,
               "SV[0] after the first step is not (-1/16, -1/16)");
    }
    trace += fmt::format("step {} symbol {}\n", n, r.symbol) + d.Snapshot();
  }
  o.Expect(trace == golden, "10-step snapshot differs from the golden file");
  if (o.pass) o.detail = "first symbol 55, 10-step trace identical";
  return o;
}

// Thresholds (SER 0, final block MSE < 2^-6) are calibration choices for the
// noiseless scenario.
Outcome Convergence() {
  Outcome o;
  const ChannelConfig cfg = ScenarioS();
  const DecoderParams p;
  const std::vector<int> symbols = GenerateSymbols(cfg);
  const std::vector<CFx> x = *Transmit(symbols, cfg, p);
  auto d = [](const CFx& v) {
    return Cplx<double>{v.re().ToDouble(), v.im().ToDouble()};
  };
  ReferenceDecoder<double> ref(p);
  int tail_errors = 0;
  for (int64_t n = 0; n < cfg.n_train; ++n) {
    const auto out = ref.Step(d(x[2 * n + 1]), d(x[2 * n]), symbols[n]);
    if (n >= cfg.n_train - cfg.block_size && out.symbol != symbols[n]) {
      ++tail_errors;
    }
  }
  const TrialMetrics m = *RunTrial(cfg, ScenarioSParams());
  o.detail = fmt::format(
      "reference errors in last training block {}/{}; fixed-point SER {:.4f} "
      "({} errors), final MSE {:.6f}",
      tail_errors, cfg.block_size, m.ser, m.symbol_errors, m.final_mse());
  const bool ok = tail_errors == 0 && m.n_measure == 10000 &&
                  m.symbol_errors == 0 && m.final_mse() < 1.0 / 64;
  o.pass = ok;
  return o;
}

Outcome ExplorerProperties() {
  using testing_support::MakeRandomCase;
  Outcome o;
  std::mt19937_64 gen(2026);
  int64_t cases = 0;

  // Merging one more loop.
  for (int trial = 0; trial < 3000; ++trial) {
    testing_support::RandomCase c = MakeRandomCase(gen, true, true);
    const int64_t before = Evaluate(c.design, c.arch)->latency_cycles;
    for (const LoopSpec* l : c.design.loops()) {
      ArchConfig merged = c.arch;
      if (merged.loops[l->label].merge) continue;
      merged.loops[l->label].merge = true;
      absl::StatusOr<DesignReport> after = Evaluate(c.design, merged);
      if (!after.ok()) continue;  // merge next to a pipelined loop
      ++cases;
      o.Expect(after->latency_cycles <= before,
               fmt::format("merging {} raised latency", l->label));
    }
  }

  // Unrolling further: any factor on register designs, divisor chains when
  // memory ports apply.
  for (int trial = 0; trial < 3000; ++trial) {
    const bool memory = trial % 2 == 1;
    testing_support::RandomCase c = MakeRandomCase(gen, memory, true);
    if (memory) {
      for (const LoopSpec* l : c.design.loops()) c.arch.loops[l->label].unroll = 1;
    }
    const DesignReport base = *Evaluate(c.design, c.arch);
    for (const LoopSpec* l : c.design.loops()) {
      const int64_t u = c.arch.loops[l->label].unroll;
      std::vector<int64_t> next;
      for (int64_t v = u + 1; v <= l->trips + 2; ++v) {
        if (!memory || (l->trips % v == 0 && v % u == 0)) next.push_back(v);
      }
      for (int64_t v : next) {
        ArchConfig more = c.arch;
        more.loops[l->label].unroll = v;
        const DesignReport r = *Evaluate(c.design, more);
        ++cases;
        o.Expect(r.latency_cycles <= base.latency_cycles,
                 fmt::format("unrolling {} to {} raised latency", l->label, v));
        o.Expect(r.area >= base.area,
                 fmt::format("unrolling {} to {} lowered area", l->label, v));
      }
    }
  }

  // Pipelined loop latency.
  for (int trial = 0; trial < 5000; ++trial) {
    const int64_t n = 1 + static_cast<int64_t>(gen() % 200);
    const int64_t ii = 1 + static_cast<int64_t>(gen() % 8);
    const int64_t depth = 1 + static_cast<int64_t>(gen() % 20);
    DesignModel d;
    d.overhead_cycles = 0;
    d.items = {testing_support::MakeLoop("p", n)};
    ArchConfig arch;
    arch.loops["p"].pipeline = PipelineDirective{ii, depth};
    const int64_t expected = (n - 1) * ii + depth;
    ++cases;
    o.Expect(PipelineLatency(n, ii, depth) == expected &&
                 Evaluate(d, arch)->latency_cycles == expected,
             fmt::format("pipeline N={} II={} D={}", n, ii, depth));
  }
  if (o.pass) o.detail = fmt::format("{} random cases", cases);
  return o;
}

Outcome WidthInference() {
  Outcome o;
  absl::StatusOr<ExprNode> fig2 = ParseExpr(Data("fig2_counter.expr"));
  absl::StatusOr<ExprNode> cast = ParseExpr(Data("int17_cast.expr"));
  o.Expect(fig2.ok() && cast.ok(), "bundled expressions do not parse");
  if (!o.pass) return o;
  const int w_fig2 = InferWidths(*fig2)->front().info.width;
  const int w_cast = InferWidths(*cast)->front().info.width;
  o.Expect(w_fig2 == 10, fmt::format("counter width {}", w_fig2));
  o.Expect(w_cast == 17, fmt::format("cast width {}", w_cast));
  testing_support::TreeGen g(77);
  int trees = 0;
  for (; trees < 2000; ++trees) {
    const std::string problem = testing_support::EnumerationMismatch(
        g.Make(g.Pick(1, 3), trees % 2 == 1), trees % 2 == 0);
    o.Expect(problem.empty(), problem);
  }
  if (o.pass) {
    o.detail = fmt::format("counter 10 bits, cast 17 bits, {} trees enumerated",
                           trees);
  }
  return o;
}

}  // namespace
}  // namespace qamhls

int main(int argc, char** argv) {
  using qamhls::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"bundled config latency", qamhls::LatencyReproduction},
      {"bundled config data rates", qamhls::DataRates},
      {"bundled config area ordering", qamhls::AreaOrdering},
      {"throughput goal", qamhls::ThroughputGoal},
      {"fixed-point oracle equivalence", qamhls::OracleEquivalence},
      {"slicer round trip", qamhls::SlicerRoundTrip},
      {"decoder golden trace", qamhls::GoldenTrace},
      {"scenario S convergence", qamhls::Convergence},
      {"explorer properties", qamhls::ExplorerProperties},
      {"width inference", qamhls::WidthInference},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (size_t i = 0; i < checks.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && !only.count(id)) continue;
    const Outcome o = checks[i].second();
    if (!o.pass) ++failures;
    std::cout << fmt::format("{:>2} {} {}: {}", id, o.pass ? "PASS" : "FAIL",
                             checks[i].first, o.detail)
              << std::endl;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
