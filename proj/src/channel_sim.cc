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

#include "qamhls/channel_sim.h"

#include <array>
#include <cmath>
#include <functional>
#include <numbers>

#include "fmt/format.h"
#include "qamhls/reference_decoder.h"

namespace qamhls {
namespace {

Rational Abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

struct StepOutcome {
  int symbol;
  double e_re;
  double e_im;
};

// Shared trial loop. `step` runs one decoder step on step index n with the
// two samples (newest first) and the training symbol or -1.
absl::StatusOr<TrialMetrics> RunLoop(
    const ChannelConfig& cfg, const DecoderParams& params,
    const std::function<StepOutcome(const CFx&, const CFx&, int)>& step) {
  if (absl::Status s = ValidateChannel(cfg); !s.ok()) return s;
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  const std::vector<int> symbols = GenerateSymbols(cfg);
  absl::StatusOr<std::vector<CFx>> samples = Transmit(symbols, cfg, params);
  if (!samples.ok()) return samples.status();

  TrialMetrics m;
  m.n_measure = cfg.n_measure;
  const auto total = static_cast<int64_t>(symbols.size());
  double block_sum = 0;
  int64_t in_block = 0;
  for (int64_t n = 0; n < total; ++n) {
    const bool training = n < cfg.n_train;
    const StepOutcome out =
        step((*samples)[2 * n + 1], (*samples)[2 * n],
             training ? symbols[n] : -1);
    if (!training && out.symbol != symbols[n]) ++m.symbol_errors;
    block_sum += out.e_re * out.e_re + out.e_im * out.e_im;
    ++in_block;
    if (in_block == cfg.block_size || n + 1 == total) {
      m.mse_per_block.push_back(block_sum / static_cast<double>(in_block));
      m.cumulative_errors.push_back(m.symbol_errors);
      block_sum = 0;
      in_block = 0;
    }
  }
  m.ser = cfg.n_measure > 0 ? static_cast<double>(m.symbol_errors) /
                                  static_cast<double>(cfg.n_measure)
                            : 0.0;
  m.converged = cfg.n_measure > 0 && m.ser < cfg.max_ser;
  return m;
}

}  // namespace

Xorshift64Star::Xorshift64Star(uint64_t seed) {
  // splitmix64
  uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  z ^= z >> 31;
  state_ = z != 0 ? z : 0x2545F4914F6CDD1Dull;
}

uint64_t Xorshift64Star::Next() {
  state_ ^= state_ >> 12;
  state_ ^= state_ << 25;
  state_ ^= state_ >> 27;
  return state_ * 0x2545F4914F6CDD1Dull;
}

double Xorshift64Star::NextUniform() {
  return static_cast<double>((Next() >> 11) + 1) * 0x1.0p-53;
}

std::pair<double, double> Xorshift64Star::NextGaussianPair() {
  const double u1 = NextUniform();
  const double u2 = NextUniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(theta), r * std::sin(theta)};
}

Rational WorstCaseAmplitude(const std::vector<ComplexRational>& taps) {
  // Each tap of one parity meets a different symbol, and a symbol part
  // reaches 7/16, so the bound is attained.
  std::array<Rational, 2> sums = {Rational(0), Rational(0)};
  for (size_t j = 0; j < taps.size(); ++j) {
    sums[j % 2] += Abs(taps[j].re) + Abs(taps[j].im);
  }
  return std::max(sums[0], sums[1]) * Rational(7, 16);
}

absl::Status ValidateChannel(const ChannelConfig& cfg) {
  if (cfg.taps.empty()) {
    return absl::InvalidArgumentError("channel has no taps");
  }
  if (cfg.noise_sigma < 0) {
    return absl::InvalidArgumentError("noise_sigma must be nonnegative");
  }
  if (cfg.n_train < 0 || cfg.n_measure < 0) {
    return absl::InvalidArgumentError("symbol counts must be nonnegative");
  }
  if (cfg.block_size < 1) {
    return absl::InvalidArgumentError("block size must be positive");
  }
  const Rational peak = WorstCaseAmplitude(cfg.taps);
  if (peak >= Rational(1, 2)) {
    return absl::InvalidArgumentError(fmt::format(
        "worst-case channel output {} per dimension reaches the input range "
        "limit 0.5",
        ToDecimalString(peak)));
  }
  return absl::OkStatus();
}

CFx MapSymbol(int symbol, const DecoderParams& params) {
  return ConstellationPoint(symbol, params.x_format());
}

std::vector<int> GenerateSymbols(const ChannelConfig& cfg) {
  Xorshift64Star rng(cfg.seed);
  std::vector<int> symbols(cfg.n_train + cfg.n_measure);
  for (int& s : symbols) s = rng.NextSymbol();
  return symbols;
}

absl::StatusOr<std::vector<CFx>> Transmit(const std::vector<int>& symbols,
                                          const ChannelConfig& cfg,
                                          const DecoderParams& params) {
  if (absl::Status s = ValidateChannel(cfg); !s.ok()) return s;
  const FxFormat input =
      params.x_format().WithModes(Quant::kRnd, Overflow::kSat);
  std::vector<ComplexRational> points;
  points.reserve(symbols.size());
  for (int s : symbols) {
    const SymbolLevels lv = LevelsOfSymbol(s);
    points.push_back({Rational(lv.re, 8) + Rational(1, 16),
                      Rational(lv.im, 8) + Rational(1, 16)});
  }
  Xorshift64Star noise(cfg.seed + kNoiseSeedOffset);
  const bool noisy = cfg.noise_sigma > 0;
  const double sigma = ToDouble(cfg.noise_sigma);

  const auto n_samples = static_cast<int64_t>(2 * symbols.size());
  const auto n_taps = static_cast<int64_t>(cfg.taps.size());
  std::vector<CFx> out;
  out.reserve(n_samples);
  for (int64_t j = 0; j < n_samples; ++j) {
    Rational re = 0;
    Rational im = 0;
    for (int64_t t = j % 2; t < n_taps && t <= j; t += 2) {
      const ComplexRational& h = cfg.taps[t];
      const ComplexRational& a = points[(j - t) / 2];
      re += h.re * a.re - h.im * a.im;
      im += h.re * a.im + h.im * a.re;
    }
    if (noisy) {
      const auto [z0, z1] = noise.NextGaussianPair();
      re += Rational(sigma * z0);
      im += Rational(sigma * z1);
    }
    out.push_back(CFx::FromRational(re, im, input));
  }
  for (CFx& v : out) v = CConvert(v, params.x_format());
  return out;
}

absl::StatusOr<TrialMetrics> RunTrial(const ChannelConfig& cfg,
                                      const DecoderParams& params) {
  absl::StatusOr<QamDecoder> decoder = QamDecoder::Create(params);
  if (!decoder.ok()) return decoder.status();
  return RunLoop(cfg, params,
                 [&](const CFx& newest, const CFx& older, int truth) {
                   const std::array<CFx, 2> in = {newest, older};
                   const StepResult r = truth >= 0
                                            ? decoder->StepTrained(in, truth)
                                            : decoder->Step(in);
                   return StepOutcome{r.symbol, r.e.re().ToDouble(),
                                      r.e.im().ToDouble()};
                 });
}

absl::StatusOr<TrialMetrics> RunReferenceTrial(const ChannelConfig& cfg,
                                               const DecoderParams& params) {
  ReferenceDecoder<double> decoder(params);
  return RunLoop(cfg, params,
                 [&](const CFx& newest, const CFx& older, int truth) {
                   const auto r = decoder.Step(
                       {newest.re().ToDouble(), newest.im().ToDouble()},
                       {older.re().ToDouble(), older.im().ToDouble()}, truth);
                   return StepOutcome{r.symbol, r.e.re, r.e.im};
                 });
}

ChannelConfig ScenarioS() {
  ChannelConfig cfg;
  cfg.taps = {{Rational(21, 20), 0},
              {Rational(21, 20), 0},
              {Rational(1, 20), 0},
              {Rational(1, 20), 0}};
  cfg.seed = 1;
  cfg.n_train = 2000;
  cfg.n_measure = 10000;
  return cfg;
}

DecoderParams ScenarioSParams() {
  DecoderParams p;
  p.coef_quant = Quant::kRnd;
  return p;
}

std::string TrialReportText(const TrialMetrics& m) {
  std::string out = fmt::format("{:>7}  {:>14}  {:>17}\n", "block", "mse",
                                "cumulative_errors");
  for (size_t b = 0; b < m.mse_per_block.size(); ++b) {
    out += fmt::format("{:>7}  {:>14.9f}  {:>17}\n", b, m.mse_per_block[b],
                       m.cumulative_errors[b]);
  }
  out += fmt::format("symbol_errors {} / {}  ser {:.6f}  converged {}\n",
                     m.symbol_errors, m.n_measure, m.ser,
                     m.converged ? "true" : "false");
  return out;
}

std::string TrialReportCsv(const TrialMetrics& m) {
  std::string out = "block_index,mse,cumulative_errors\n";
  for (size_t b = 0; b < m.mse_per_block.size(); ++b) {
    out += fmt::format("{},{:.9f},{}\n", b, m.mse_per_block[b],
                       m.cumulative_errors[b]);
  }
  out += fmt::format("# ser={:.6f} converged={} symbol_errors={}\n", m.ser,
                     m.converged ? "true" : "false", m.symbol_errors);
  return out;
}

}  // namespace qamhls
