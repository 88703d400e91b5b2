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

#ifndef QAMHLS_CHANNEL_SIM_H_
#define QAMHLS_CHANNEL_SIM_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "qamhls/complex_fixed.h"
#include "qamhls/qam_decoder.h"
#include "qamhls/rational.h"

namespace qamhls {

// xorshift64* (Vigna): shifts 12, 25, 27 and multiplier
// 0x2545F4914F6CDD1D, seeded through one splitmix64 round so that every
// seed (including 0) gives a nonzero state.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(uint64_t seed);

  uint64_t Next();
  // Top six bits of the next output.
  int NextSymbol() { return static_cast<int>(Next() >> 58); }
  // Uniform on (0, 1], 53-bit resolution.
  double NextUniform();
  // Two independent standard normals from one Box-Muller transform:
  // u1 then u2 are drawn, r = sqrt(-2 ln u1), (r cos 2 pi u2, r sin 2 pi u2).
  std::pair<double, double> NextGaussianPair();

 private:
  uint64_t state_;
};

// Added to the trial seed to seed the noise generator.
inline constexpr uint64_t kNoiseSeedOffset = 0x9E3779B97F4A7C15ull;

struct ComplexRational {
  Rational re;
  Rational im;
  friend bool operator==(const ComplexRational&, const ComplexRational&) =
      default;
};

struct ChannelConfig {
  // Impulse response at T/2 spacing.
  std::vector<ComplexRational> taps;
  Rational noise_sigma = 0;
  uint64_t seed = 1;
  int64_t n_train = 0;
  int64_t n_measure = 0;
  // Symbols per MSE block.
  int64_t block_size = 100;
  // converged = ser < max_ser.
  double max_ser = 1e-3;
  bool require_converged = false;

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

// Rejects empty tap lists, negative counts or sigma, and channels whose
// worst-case noiseless output could reach 1/2 in either dimension.
absl::Status ValidateChannel(const ChannelConfig& cfg);

// Largest noiseless |output| per dimension over all symbol sequences.
Rational WorstCaseAmplitude(const std::vector<ComplexRational>& taps);

// Constellation point of a 6-bit code in (x_width, 0).
CFx MapSymbol(int symbol, const DecoderParams& params);

// The symbol stream of a trial: n_train + n_measure draws.
std::vector<int> GenerateSymbols(const ChannelConfig& cfg);

// Symbols are impulses at even half-sample indices, convolved with the taps,
// plus optional complex Gaussian noise per half-sample (real part first),
// then rounded and saturated into (x_width, 0). Output has two samples per
// symbol; the channel tail past the last symbol is dropped.
absl::StatusOr<std::vector<CFx>> Transmit(const std::vector<int>& symbols,
                                          const ChannelConfig& cfg,
                                          const DecoderParams& params);

struct TrialMetrics {
  std::vector<double> mse_per_block;
  // Measurement-window decision errors up to the end of each block.
  std::vector<int64_t> cumulative_errors;
  int64_t symbol_errors = 0;
  int64_t n_measure = 0;
  double ser = 0;
  bool converged = false;

  double final_mse() const {
    return mse_per_block.empty() ? 0.0 : mse_per_block.back();
  }
  friend bool operator==(const TrialMetrics&, const TrialMetrics&) = default;
};

// Runs the fixed-point decoder: training steps with the known symbols, then
// decision-directed steps whose decisions are scored. Step n is fed
// {sample[2n+1], sample[2n]}, newest first.
absl::StatusOr<TrialMetrics> RunTrial(const ChannelConfig& cfg,
                                      const DecoderParams& params);

// Same trial on the double-precision reference decoder.
absl::StatusOr<TrialMetrics> RunReferenceTrial(const ChannelConfig& cfg,
                                               const DecoderParams& params);

// The calibration scenario: T/2 taps [1.05, 1.05, 0.05, 0.05] (main pulse
// plus a one-symbol post-cursor), noiseless, seed 1, 2000 training and
// 10000 measured symbols.
ChannelConfig ScenarioS();

// Default decoder with rounded coefficient updates. Truncated updates only
// ever decrease a coefficient at mu = 2^-8, so adaptation needs RND.
DecoderParams ScenarioSParams();

// Aligned text and CSV renderings (rates and MSE with fixed precision).
std::string TrialReportText(const TrialMetrics& m);
std::string TrialReportCsv(const TrialMetrics& m);

}  // namespace qamhls

#endif  // QAMHLS_CHANNEL_SIM_H_
