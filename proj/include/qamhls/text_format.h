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

#ifndef QAMHLS_TEXT_FORMAT_H_
#define QAMHLS_TEXT_FORMAT_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "qamhls/channel_sim.h"
#include "qamhls/hls_explorer.h"
#include "qamhls/qam_decoder.h"
#include "qamhls/width_inference.h"

namespace qamhls {

// Line-oriented formats; '#' starts a comment. Errors name the line.
//
// design:  design <name> | clock_ns <rational> | bits_per_output <int> |
//          overhead_cycles <int> |
//          array <name> registers [words=<int> bits=<int>] |
//          array <name> memory ports=<int> pack=<int> [words=.. bits=..] |
//          loop <label> trips=<int> [mults=<int>] [adds=<int>] [nomerge]
//               [access <array>=<int>...] |
//          barrier
// arch:    arch <name> | merge <label>... | unroll <label> <U|full> |
//          pipeline <label> ii=<int> depth=<int>
// trial:   taps <re>[,<im>]; ... | noise_sigma <rational> | seed <u64> |
//          train <int> | measure <int> | require_converged <bool> |
//          block_size <int> | max_ser <real> | coef_update trn|rnd
// expr:    one prefix s-expression built from
//          (range <name> <lo> <hi>) (var <name> s<W>|u<W>) (add e e)
//          (sub e e) (mul e e) (shl <k> e) (shr <k> e) (cast [s|u]<W> e)

absl::StatusOr<DesignModel> ParseDesign(std::string_view text);
std::string RenderDesign(const DesignModel& design);

// With a design, loop labels are checked against it.
absl::StatusOr<ArchConfig> ParseArch(std::string_view text,
                                     const DesignModel* design = nullptr);
std::string RenderArch(const ArchConfig& arch);

struct TrialSpec {
  ChannelConfig channel;
  DecoderParams decoder;
  friend bool operator==(const TrialSpec&, const TrialSpec&) = default;
};

absl::StatusOr<TrialSpec> ParseTrial(std::string_view text);
std::string RenderTrial(const TrialSpec& trial);

absl::StatusOr<ExprNode> ParseExpr(std::string_view text);
std::string RenderExpr(const ExprNode& node);

}  // namespace qamhls

#endif  // QAMHLS_TEXT_FORMAT_H_
