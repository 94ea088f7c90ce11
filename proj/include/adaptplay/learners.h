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

#ifndef ADAPTPLAY_LEARNERS_H_
#define ADAPTPLAY_LEARNERS_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adaptplay/geometry.h"
#include "adaptplay/vec.h"

namespace adaptplay {

enum class Algorithm { kOptMD, kOptDA, kDSOptMD, kOptFTRL, kOMWU };

std::string_view AlgorithmName(Algorithm a);
// Accepts "optmd" (alias "peg"), "optda", "ds-optmd", "optftrl", "omwu".
Algorithm ParseAlgorithm(std::string_view name);

// Player-local learning rate eta_t = sqrt(tau + sum_{s<t} |g_s - g_{s-1}|_*^2)
// with g_0 = 0. A fixed rate ignores the increments for eta but still records
// them for logging.
struct RateState {
  double tau = 1.0;
  double sum_increments = 0.0;
  // g_{t-1}; absent before the first feedback (treated as zero).
  std::optional<Vec> last_feedback;
  double last_increment = 0.0;
  std::optional<double> fixed_eta;

  static RateState Adaptive(double tau);
  static RateState Fixed(double eta);

  double Eta() const;
};

// Adds |g - g_prev|_*^2 (dual norm of `reg`) to the running sum and stores g.
RateState RateIngest(const RateState& rate, const Regularizer& reg, ConstSpan g);

// One player's optimistic learner. Each round is a commit (returns the played
// point x_{t+1/2}) followed by exactly one ingest of the feedback g_t.
class Learner {
 public:
  // `anchor` is x_1 for OptMD and DS-OptMD; defaults to argmin h.
  Learner(Algorithm algorithm, Regularizer reg, RateState rate,
          std::optional<Vec> anchor = std::nullopt);

  // Returns x_{t+1/2}. Calling twice within a round returns the same point.
  const Vec& Commit();
  // Consumes g_t and advances to round t+1. Throws ProtocolError when no
  // commit is pending.
  void Ingest(ConstSpan g);

  Algorithm algorithm() const { return algorithm_; }
  const Regularizer& regularizer() const { return reg_; }
  const RateState& rate() const { return rate_; }
  // eta_t of the current round (the rate used by the next commit).
  double eta() const { return rate_.Eta(); }
  long round() const { return round_; }
  bool committed() const { return committed_; }

  // x_t; for OptFTRL this mirrors the last leading point.
  const Vec& base() const { return base_; }
  // x_{t+1/2} of the last commit.
  const Vec& leading() const { return leading_; }
  // sum_{s<t} g_s (maintained by every algorithm).
  const Vec& dual_sum() const { return dual_sum_; }
  const Vec& anchor() const { return anchor_; }
  // g_{t-1}, zero before the first ingest.
  Vec last_feedback() const;

  // Dual state y_t = -dual_sum / eta_t of the dual-averaging family.
  Vec DualState() const;

  // For the entropy regularizer, dual points y with base = Q(y) and
  // leading = Q(y'). Iterates are tracked in the dual so that divergences to
  // them stay finite after coordinates underflow to zero.
  const std::optional<Vec>& base_dual() const { return base_dual_; }
  const std::optional<Vec>& leading_dual() const { return leading_dual_; }

  // phi(p): h(p) - min h for the dual-averaging family, D(p, x_1) for
  // DS-OptMD and OptMD.
  double ArMeasure(ConstSpan p) const;
  // psi_t(p): F(p, y_t) for the dual-averaging family, D(p, x_t) for
  // DS-OptMD.
  double Energy(ConstSpan p) const;

  // Whether the per-step energy inequality is claimed for this algorithm.
  bool HasTemplate() const;

 private:
  Algorithm algorithm_;
  Regularizer reg_;
  RateState rate_;
  Vec anchor_;
  Vec base_;
  Vec leading_;
  Vec dual_sum_;
  std::optional<Vec> base_dual_;
  std::optional<Vec> leading_dual_;
  long round_ = 1;
  bool committed_ = false;
};

// Quantities of one step of the energy inequality, for one probe point p.
struct TemplateTerms {
  double eta_t = 0.0;
  double eta_next = 0.0;
  double est_t = 0.0;     // psi_t(p)
  double est_next = 0.0;  // psi_{t+1}(p)
  double armeasure = 0.0; // phi(p)
  double inner = 0.0;     // <g_t, x_{t+1/2} - p>
  double cross = 0.0;     // <g_t - g_{t-1}, x_{t+1/2} - x_{t+1}>
  double breg_next_lead = 0.0;  // D(x_{t+1}, x_{t+1/2})
  double breg_lead_base = 0.0;  // D(x_{t+1/2}, x_t)
};

// RHS - LHS of the energy inequality; non-negative up to rounding.
double TemplateResidual(const TemplateTerms& terms);

// Snapshot of a learner taken after commit and before ingest.
struct StepSnapshot {
  double eta = 0.0;
  Vec base;
  Vec leading;
  Vec last_feedback;
  Vec dual_sum;
  std::optional<Vec> base_dual;
  std::optional<Vec> leading_dual;
};
StepSnapshot Snapshot(const Learner& learner);

// Terms for one step, given the pre-ingest snapshot, the learner after ingest
// and the ingested feedback. Returns nullopt for algorithms without the
// inequality (OptMD, OptFTRL).
std::optional<TemplateTerms> GatherTemplateTerms(const StepSnapshot& before,
                                                 const Learner& after,
                                                 ConstSpan g, ConstSpan probe);

// Per-step history of one player, used by the regret-bound check.
struct PlayerTrace {
  std::vector<Vec> played;    // x_{t+1/2}, t = 1..T
  std::vector<Vec> feedback;  // g_t, t = 1..T
  std::vector<double> eta;    // eta_t, t = 1..T+1
};

struct BoundTerms {
  double lhs = 0.0;
  double rhs = 0.0;
};

// lhs = sum <g_t, x_{t+1/2} - p>;
// rhs = eta_{T+1} phi(p) + sum |g_t - g_{t-1}|_*^2 / eta_t
//       - sum_{t>=2} eta_{t-1}/8 |x_{t+1/2} - x_{t-1/2}|^2.
BoundTerms RvuBoundTerms(const PlayerTrace& trace, const Learner& learner,
                         ConstSpan comparator);

}  // namespace adaptplay

#endif  // ADAPTPLAY_LEARNERS_H_
