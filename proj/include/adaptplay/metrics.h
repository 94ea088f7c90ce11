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

#ifndef ADAPTPLAY_METRICS_H_
#define ADAPTPLAY_METRICS_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "adaptplay/games.h"
#include "adaptplay/vec.h"

namespace adaptplay {

// ---------------------------------------------------------------------------
// Offline convex oracle

struct OracleOptions {
  int max_iterations = 500;
  int restarts = 5;
  // Stop a start once its Frank-Wolfe gap falls below this value.
  double tolerance = 1e-9;
  std::uint64_t seed = 17;
};

struct OracleResult {
  Vec minimizer;
  double value = 0.0;
  // Frank-Wolfe gap max_{x} <grad f(p), p - x>: an upper bound on
  // f(p) - min f for convex f.
  double certified_gap = 0.0;
  int iterations = 0;
};

// Minimizes a smooth convex function over a compact action set with
// accelerated projected gradient (backtracking on the Lipschitz estimate,
// adaptive restart). Starts from `warm_start` when given, then from seeded
// random points until one is certified within tolerance or the restart
// budget is exhausted; the best start wins.
OracleResult MinimizeConvex(const ActionSet& set,
                            const std::function<double(ConstSpan)>& f,
                            const std::function<Vec(ConstSpan)>& grad,
                            const OracleOptions& options,
                            const std::optional<Vec>& warm_start = std::nullopt);

// ---------------------------------------------------------------------------
// Comparators

struct FullSet {};
struct ComparatorPoint {
  Vec point;
};
struct ComparatorSamples {
  std::vector<Vec> points;
};
// Full-set comparator restricted to a box; required for unconstrained sets.
struct ComparatorBox {
  ActionSet box;
};
using Comparator = std::variant<FullSet, ComparatorPoint, ComparatorSamples, ComparatorBox>;

struct RegretValue {
  double regret = 0.0;
  // Bound on how far the reported comparator loss may sit above the true
  // minimum (zero for exact comparators).
  double oracle_gap = 0.0;
  Vec best_response;
  long steps = 0;
};

// ---------------------------------------------------------------------------
// Regret ledger

struct LedgerOptions {
  OracleOptions oracle;
  // Consecutive opponent summaries whose coordinates all stay within this
  // distance of the first summary of a block are merged into one weighted
  // entry holding their mean. Zero disables merging.
  double merge_tolerance = 1e-7;
};

// Cumulative losses and the data needed to evaluate min_p sum_t l_i(p, x_{-i,t}).
//
// Own-linear games keep the summed feedback vector (exact, O(dim)); other
// games keep the run-length-merged sequence of opponent summaries.
class RegretLedger {
 public:
  RegretLedger(const GameDefinition& game, LedgerOptions options = {});

  // Records one round. `feedback[i]` must be V_i(played).
  void Record(const JointAction& played, const std::vector<Vec>& feedback);

  long steps() const { return steps_; }
  int players() const { return static_cast<int>(cumulative_loss_.size()); }
  double CumulativeLoss(int player) const { return cumulative_loss_[player]; }
  // sum_t l_i(p, x_{-i,t}).
  double ComparatorLoss(int player, ConstSpan p) const;
  size_t StoredBlocks(int player) const;

  // Regret against `comparator`. For the full set on non-own-linear games the
  // offline oracle is warm-started from the previous answer for the player.
  RegretValue IndividualRegret(int player, const Comparator& comparator = FullSet{}) const;

 private:
  struct Block {
    double count = 0.0;
    Vec first;
    Vec sum;
  };
  const GameDefinition* game_;
  LedgerOptions options_;
  long steps_ = 0;
  Vec cumulative_loss_;
  std::vector<Vec> summed_grad_;
  std::vector<std::vector<Block>> blocks_;
  mutable std::vector<std::optional<Vec>> warm_;
};

// Sum of individual regrets; throws DimensionError on mismatched step counts.
double SocialRegret(const std::vector<RegretValue>& regrets);

// ---------------------------------------------------------------------------
// Gap function and best responses

// l_i(x) - min_{p in comparator} l_i(p, x_{-i}).
double GapFunction(const GameDefinition& game, const JointAction& x, int player,
                   const Comparator& comparator = FullSet{},
                   const OracleOptions& options = {});

struct BestResponse {
  // Simplex own-linear games: indices of the minimal-payoff pure strategies
  // spanning the best-response face.
  std::vector<int> face;
  // Otherwise: the oracle minimizer.
  Vec point;
  double certified_gap = 0.0;
  double stationarity = 0.0;  // |p - Proj(p - grad)|_2
};

BestResponse BestResponseSet(const GameDefinition& game, int player,
                             const JointAction& fixed, double tie_tol = 1e-12,
                             const OracleOptions& options = {});

// l1 distance from a simplex point to the face spanned by `face`.
double DistanceToFace(ConstSpan x, const std::vector<int>& face);

// ---------------------------------------------------------------------------
// Sequences

struct SumCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};
// lhs = sum a_t / sqrt(sum_{s<=t} a_s), rhs = 2 sqrt(sum a_t). Throws
// PreconditionError when a prefix sum is not positive.
SumCheck AdaptiveSumCheck(ConstSpan a);

enum class NormKind { kL1, kL2, kLinf };
double VecNorm(ConstSpan v, NormKind kind);
Vec DistanceToPoint(const std::vector<Vec>& trajectory, ConstSpan target, NormKind kind);

}  // namespace adaptplay

#endif  // ADAPTPLAY_METRICS_H_
