// Copyright 2026 The adaptplay Authors
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

#ifndef ADAPTPLAY_GAMES_H_
#define ADAPTPLAY_GAMES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "adaptplay/geometry.h"
#include "adaptplay/vec.h"

namespace adaptplay {

// One action per player.
using JointAction = std::vector<Vec>;

// A continuous convex game given by its loss and gradient-field oracles.
//
// Regret and best-response computations need l_i(p, x_{-i}) for comparator
// points p. Games provide this through an "opponent summary": a vector
// computed from the joint action that determines l_i(., x_{-i}) completely
// (the sum of the other bids for the Kelly auction, the full joint action by
// default). Games that are linear in the player's own action
// (l_i(p, x_{-i}) = <p, V_i(x)>) set own_linear and are handled exactly from
// summed feedback.
struct GameDefinition {
  std::string name;
  std::vector<ActionSet> action_sets;
  std::function<double(int, const JointAction&)> loss;
  std::function<Vec(int, const JointAction&)> grad;

  std::function<Vec(int, const JointAction&)> opponent_summary;
  std::function<double(int, ConstSpan p, ConstSpan summary)> summary_loss;
  std::function<Vec(int, ConstSpan p, ConstSpan summary)> summary_grad;

  bool own_linear = false;
  bool zero_sum = false;
  std::optional<JointAction> nash;
  // Sampled estimate of the joint Lipschitz constant of V (diagnostics only).
  std::optional<double> lipschitz;

  int players() const { return static_cast<int>(action_sets.size()); }
  double Loss(int player, const JointAction& x) const;
  Vec Grad(int player, const JointAction& x) const;
};

// Fills opponent_summary/summary_loss/summary_grad with the generic
// "whole joint action" summary when they are absent.
void InstallDefaultSummary(GameDefinition& game);

// l_1(theta, phi) = theta * phi = -l_2 on [lower, upper]^2.
GameDefinition BuildBilinear(double lower, double upper);

// Mixed extension of the zero-sum matrix game with cost matrix `m` (row
// player minimizes theta^T M phi).
GameDefinition BuildMatrixZeroSum(std::vector<Vec> m);

// rows x cols matrix with entries iid uniform on [-range, range].
GameDefinition BuildRandomZeroSum(int rows, int cols, std::uint64_t seed,
                                  double range = 1.0);
std::vector<Vec> RandomMatrix(int rows, int cols, std::uint64_t seed,
                              double range);

struct KellyParams {
  Vec quantity;  // q_k
  Vec barrier;   // c_k
  Vec gain;      // g_i
  Vec budget;    // b_i
};
// q_k, g_i ~ U[4, 6], c_k = 1, b_i ~ U[5, 10].
KellyParams DrawKellyParams(int resources, int bidders, std::uint64_t seed);
GameDefinition BuildKelly(const KellyParams& params);
GameDefinition BuildKelly(int resources, int bidders, std::uint64_t seed);
// Allocation rho_{ik} = q_k x_{ik} / (c_k + sum_j x_{jk}).
double KellyAllocation(const KellyParams& params, const JointAction& x,
                       int bidder, int resource);

// Three-player matching pennies: 1 matches 2, 2 matches 3, 3 mismatches 1.
GameDefinition BuildJordan();

// Gradient selection vs central finite differences in the player's own
// coordinates at `x`; returns the max relative error over coordinates.
double GradientCheck(const GameDefinition& game, int player,
                     const JointAction& x, double step = 1e-5);

JointAction SampleJointAction(const GameDefinition& game, std::mt19937_64& rng);

enum class StabilityForm { kMonotone, kVariational };

// Monotone form: min over sampled pairs of <V(x) - V(x'), x - x'>.
// Variational form: min over samples of <V(x), x - x*> with x* the declared
// Nash point (ConfigError when there is none).
double VsProbe(const GameDefinition& game, StabilityForm form, int samples,
               std::uint64_t seed);

}  // namespace adaptplay

#endif  // ADAPTPLAY_GAMES_H_
