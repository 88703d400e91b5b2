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

#include "qamhls/cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fmt/format.h"
#include "absl/status/statusor.h"
#include "qamhls/channel_sim.h"
#include "qamhls/hls_explorer.h"
#include "qamhls/text_format.h"
#include "qamhls/width_inference.h"

namespace qamhls {
namespace {

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(fmt::format("cannot open '{}'", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Prefixes parse diagnostics with the file name.
absl::Status InFile(const std::string& path, const absl::Status& s) {
  return absl::Status(s.code(), fmt::format("{}: {}", path, std::string(s.message())));
}

struct Common {
  std::string format = "table";
  std::string out_path;
};

int Emit(const Common& c, const std::string& text, std::ostream& out,
         std::ostream& err) {
  if (c.out_path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f || !(f << text)) {
    err << "error: cannot write '" << c.out_path << "'\n";
    return kExitInputError;
  }
  return kExitOk;
}

int Fail(std::ostream& err, const absl::Status& s) {
  err << "error: " << s.message() << "\n";
  return kExitInputError;
}

struct ExploreArgs {
  Common common;
  std::string design;
  std::vector<std::string> archs;
  std::string clock;
  std::optional<double> target_mbps;
  bool schedule = false;
};

int Explore(const ExploreArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(a.design);
  if (!text.ok()) return Fail(err, text.status());
  absl::StatusOr<DesignModel> design = ParseDesign(*text);
  if (!design.ok()) return Fail(err, InFile(a.design, design.status()));

  std::optional<Rational> clock;
  if (!a.clock.empty()) {
    absl::StatusOr<Rational> c = ParseRational(a.clock);
    if (!c.ok() || *c <= 0) {
      return Fail(err, absl::InvalidArgumentError(
                           fmt::format("bad --clock '{}'", a.clock)));
    }
    clock = *c;
  }

  std::vector<DesignReport> reports;
  for (const std::string& path : a.archs) {
    absl::StatusOr<std::string> atext = ReadFile(path);
    if (!atext.ok()) return Fail(err, atext.status());
    absl::StatusOr<ArchConfig> arch = ParseArch(*atext, &*design);
    if (!arch.ok()) return Fail(err, InFile(path, arch.status()));
    if (arch->name.empty()) {
      arch->name = std::filesystem::path(path).stem().string();
    }
    absl::StatusOr<DesignReport> r = Evaluate(*design, *arch, clock);
    if (!r.ok()) return Fail(err, InFile(path, r.status()));
    reports.push_back(*std::move(r));
  }

  std::string report = a.common.format == "csv"
                           ? ReportCsv(reports, a.target_mbps)
                           : ReportTable(reports, a.target_mbps);
  if (a.schedule) {
    for (const DesignReport& r : reports) report += "\n" + ScheduleListing(r);
  }
  return Emit(a.common, report, out, err);
}

struct SimulateArgs {
  Common common;
  std::string trial;
  bool reference = false;
};

int Simulate(const SimulateArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(a.trial);
  if (!text.ok()) return Fail(err, text.status());
  absl::StatusOr<TrialSpec> spec = ParseTrial(*text);
  if (!spec.ok()) return Fail(err, InFile(a.trial, spec.status()));
  absl::StatusOr<TrialMetrics> m =
      a.reference ? RunReferenceTrial(spec->channel, spec->decoder)
                  : RunTrial(spec->channel, spec->decoder);
  if (!m.ok()) return Fail(err, InFile(a.trial, m.status()));
  const std::string report = a.common.format == "csv" ? TrialReportCsv(*m)
                                                      : TrialReportText(*m);
  if (int rc = Emit(a.common, report, out, err); rc != kExitOk) return rc;
  if (spec->channel.require_converged && !m->converged) {
    err << fmt::format("not converged: ser {:.6f} (limit {})\n", m->ser,
                       spec->channel.max_ser);
    return kExitNotConverged;
  }
  return kExitOk;
}

struct WidthsArgs {
  Common common;
  std::string expr;
};

int Widths(const WidthsArgs& a, std::ostream& out, std::ostream& err) {
  absl::StatusOr<std::string> text = ReadFile(a.expr);
  if (!text.ok()) return Fail(err, text.status());
  absl::StatusOr<ExprNode> expr = ParseExpr(*text);
  if (!expr.ok()) return Fail(err, InFile(a.expr, expr.status()));
  absl::StatusOr<std::vector<AnnotatedNode>> nodes = InferWidths(*expr);
  if (!nodes.ok()) return Fail(err, InFile(a.expr, nodes.status()));
  return Emit(a.common,
              a.common.format == "csv" ? WidthReportCsv(*nodes)
                                       : WidthReport(*nodes),
              out, err);
}

void AddCommon(CLI::App* cmd, Common& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"table", "csv"}));
  cmd->add_option("--out", c.out_path, "Write the report to a file");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Fixed-point QAM decoder model and HLS architecture explorer",
               "qamhls"};
  app.require_subcommand(1);

  ExploreArgs ex;
  CLI::App* explore =
      app.add_subcommand("explore", "Latency, data rate and area per config");
  explore->add_option("design", ex.design, "Design file")->required();
  explore->add_option("arch", ex.archs, "Architecture files")->required();
  explore->add_option("--clock", ex.clock, "Clock period in ns (overrides the design)");
  explore->add_option("--target-mbps", ex.target_mbps, "Flag configs reaching this data rate");
  explore->add_flag("--schedule", ex.schedule, "Append a per-group schedule");
  AddCommon(explore, ex.common);

  SimulateArgs sim;
  CLI::App* simulate =
      app.add_subcommand("simulate", "Run a channel trial on the decoder");
  simulate->add_option("trial", sim.trial, "Trial file")->required();
  simulate->add_flag("--reference", sim.reference,
                     "Use the unquantized reference decoder");
  AddCommon(simulate, sim.common);

  WidthsArgs wd;
  CLI::App* widths =
      app.add_subcommand("widths", "Infer bit widths of an expression");
  widths->add_option("expr", wd.expr, "Expression file")->required();
  AddCommon(widths, wd.common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  if (explore->parsed()) return Explore(ex, out, err);
  if (simulate->parsed()) return Simulate(sim, out, err);
  return Widths(wd, out, err);
}

}  // namespace qamhls
