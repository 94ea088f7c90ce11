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

#include "adaptplay/learners.h"

#include <cmath>

namespace adaptplay {

std::string_view AlgorithmName(Algorithm a) {
  switch (a) {
    case Algorithm::kOptMD:
      return "optmd";
    case Algorithm::kOptDA:
      return "optda";
    case Algorithm::kDSOptMD:
      return "ds-optmd";
    case Algorithm::kOptFTRL:
      return "optftrl";
    case Algorithm::kOMWU:
      return "omwu";
  }
  return "?";
}

Algorithm ParseAlgorithm(std::string_view name) {
  if (name == "optmd" || name == "peg") return Algorithm::kOptMD;
  if (name == "optda") return Algorithm::kOptDA;
  if (name == "ds-optmd" || name == "dsoptmd") return Algorithm::kDSOptMD;
  if (name == "optftrl") return Algorithm::kOptFTRL;
  if (name == "omwu") return Algorithm::kOMWU;
  throw ConfigError("unknown algorithm '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// RateState

RateState RateState::Adaptive(double tau) {
  if (!(tau > 0.0)) throw ParameterError("RateState: tau must be positive");
  RateState r;
  r.tau = tau;
  return r;
}

RateState RateState::Fixed(double eta) {
  if (!(eta > 0.0)) throw ParameterError("RateState: fixed eta must be positive");
  RateState r;
  r.fixed_eta = eta;
  return r;
}

double RateState::Eta() const {
  if (fixed_eta) return *fixed_eta;
  return std::sqrt(tau + sum_increments);
}

RateState RateIngest(const RateState& rate, const Regularizer& reg, ConstSpan g) {
  if (static_cast<int>(g.size()) != reg.dim()) {
    throw DimensionError("RateIngest: feedback dimension mismatch");
  }
  RateState next = rate;
  const Vec prev = rate.last_feedback ? *rate.last_feedback : Vec(g.size(), 0.0);
  const double d = reg.DualNorm(Sub(g, prev));
  next.last_increment = d * d;
  next.sum_increments += next.last_increment;
  next.last_feedback = Vec(g.begin(), g.end());
  return next;
}

// ---------------------------------------------------------------------------
// Learner

Learner::Learner(Algorithm algorithm, Regularizer reg, RateState rate,
                 std::optional<Vec> anchor)
    : algorithm_(algorithm), reg_(std::move(reg)), rate_(std::move(rate)) {
  if (algorithm_ == Algorithm::kOMWU &&
      reg_.kind() != Regularizer::Kind::kNegativeEntropy) {
    throw ConfigError("OMWU requires the negative-entropy regularizer");
  }
  const int d = reg_.dim();
  if (anchor) {
    if (static_cast<int>(anchor->size()) != d) {
      throw DimensionError("Learner: anchor dimension mismatch");
    }
    if (!reg_.domain().Contains(*anchor)) {
      throw ConfigError("Learner: anchor outside the action set");
    }
    anchor_ = *anchor;
  } else {
    anchor_ = reg_.Minimizer();
  }
  dual_sum_.assign(d, 0.0);
  switch (algorithm_) {
    case Algorithm::kOptMD:
    case Algorithm::kDSOptMD:
      base_ = anchor_;
      break;
    case Algorithm::kOptDA:
    case Algorithm::kOMWU:
    case Algorithm::kOptFTRL:
      // x_1 = Q(0) = argmin h.
      base_ = MirrorMap(reg_, dual_sum_);
      break;
  }
  leading_ = base_;
  if (reg_.kind() == Regularizer::Kind::kNegativeEntropy) {
    base_dual_ = algorithm_ == Algorithm::kOptMD || algorithm_ == Algorithm::kDSOptMD
                     ? reg_.Gradient(base_)
                     : dual_sum_;
    leading_dual_ = base_dual_;
  }
}

Vec Learner::last_feedback() const {
  return rate_.last_feedback ? *rate_.last_feedback : Vec(reg_.dim(), 0.0);
}

const Vec& Learner::Commit() {
  if (committed_) return leading_;
  const double eta = rate_.Eta();
  const Vec g_prev = last_feedback();
  switch (algorithm_) {
    case Algorithm::kOptMD:
    case Algorithm::kOptDA:
    case Algorithm::kDSOptMD:
      if (base_dual_) {
        leading_dual_ = *base_dual_;
        Axpy(-1.0 / eta, g_prev, *leading_dual_);
        leading_ = MirrorMap(reg_, *leading_dual_);
      } else {
        leading_ = ProxStep(reg_, base_, g_prev, eta);
      }
      break;
    case Algorithm::kOptFTRL: {
      Vec y = Add(dual_sum_, g_prev);
      for (double& v : y) v = -v / eta;
      leading_ = MirrorMap(reg_, y);
      base_ = leading_;
      if (base_dual_) base_dual_ = leading_dual_ = y;
      break;
    }
    case Algorithm::kOMWU: {
      // Coordinate form: x_k proportional to exp(-(sum_{s<t} g_s + g_{t-1})_k / eta_t).
      Vec y(dual_sum_.size());
      for (size_t k = 0; k < y.size(); ++k) y[k] = -(dual_sum_[k] + g_prev[k]) / eta;
      leading_ = Softmax(y);
      leading_dual_ = std::move(y);
      break;
    }
  }
  committed_ = true;
  return leading_;
}

void Learner::Ingest(ConstSpan g) {
  if (!committed_) throw ProtocolError("Learner::Ingest called without a pending commit");
  if (static_cast<int>(g.size()) != reg_.dim()) {
    throw DimensionError("Learner::Ingest: feedback dimension mismatch");
  }
  const double eta_t = rate_.Eta();
  rate_ = RateIngest(rate_, reg_, g);
  const double eta_next = rate_.Eta();
  Axpy(1.0, g, dual_sum_);
  switch (algorithm_) {
    case Algorithm::kOptMD:
      if (base_dual_) {
        Axpy(-1.0 / eta_t, g, *base_dual_);
        base_ = MirrorMap(reg_, *base_dual_);
      } else {
        base_ = ProxStep(reg_, base_, g, eta_t);
      }
      break;
    case Algorithm::kOptDA:
    case Algorithm::kOMWU:
      base_ = MirrorMap(reg_, DualState());
      if (base_dual_) base_dual_ = DualState();
      break;
    case Algorithm::kDSOptMD: {
      // Dual-space mixing toward the anchor, then a mirror step.
      const double w = eta_t / eta_next;
      const Vec gb = base_dual_ ? *base_dual_ : reg_.Gradient(base_);
      const Vec ga = reg_.Gradient(anchor_);
      Vec y(gb.size());
      for (size_t k = 0; k < y.size(); ++k) {
        y[k] = w * gb[k] + (1.0 - w) * ga[k] - g[k] / eta_next;
      }
      base_ = MirrorMap(reg_, y);
      if (base_dual_) base_dual_ = std::move(y);
      break;
    }
    case Algorithm::kOptFTRL:
      base_ = leading_;
      break;
  }
  committed_ = false;
  ++round_;
}

Vec Learner::DualState() const { return Scale(dual_sum_, -1.0 / rate_.Eta()); }

bool Learner::HasTemplate() const {
  return algorithm_ == Algorithm::kOptDA || algorithm_ == Algorithm::kOMWU ||
         algorithm_ == Algorithm::kDSOptMD;
}

double Learner::ArMeasure(ConstSpan p) const {
  switch (algorithm_) {
    case Algorithm::kOptDA:
    case Algorithm::kOMWU:
    case Algorithm::kOptFTRL:
      return reg_.Value(p) - reg_.MinValue();
    case Algorithm::kOptMD:
    case Algorithm::kDSOptMD:
      return Bregman(reg_, p, anchor_);
  }
  return 0.0;
}

double Learner::Energy(ConstSpan p) const {
  if (algorithm_ == Algorithm::kDSOptMD || algorithm_ == Algorithm::kOptMD) {
    return base_dual_ ? FenchelCoupling(reg_, p, *base_dual_) : Bregman(reg_, p, base_);
  }
  return FenchelCoupling(reg_, p, DualState());
}

// ---------------------------------------------------------------------------
// Energy inequality

double TemplateResidual(const TemplateTerms& t) {
  const double rhs = t.eta_t * t.est_t - t.inner + (t.eta_next - t.eta_t) * t.armeasure +
                     t.cross - t.eta_t * t.breg_next_lead - t.eta_t * t.breg_lead_base;
  return rhs - t.eta_next * t.est_next;
}

StepSnapshot Snapshot(const Learner& learner) {
  return StepSnapshot{learner.eta(),           learner.base(),      learner.leading(),
                      learner.last_feedback(), learner.dual_sum(), learner.base_dual(),
                      learner.leading_dual()};
}

std::optional<TemplateTerms> GatherTemplateTerms(const StepSnapshot& before,
                                                 const Learner& after,
                                                 ConstSpan g, ConstSpan probe) {
  if (!after.HasTemplate()) return std::nullopt;
  const Regularizer& reg = after.regularizer();
  TemplateTerms t;
  t.eta_t = before.eta;
  t.eta_next = after.eta();
  // D(p, Q(y)) = F(p, y) for the entropy, whose iterates carry dual points.
  auto divergence = [&](ConstSpan target, ConstSpan base, const std::optional<Vec>& dual) {
    return dual ? FenchelCoupling(reg, target, *dual) : Bregman(reg, target, base);
  };
  if (after.algorithm() == Algorithm::kDSOptMD) {
    t.est_t = divergence(probe, before.base, before.base_dual);
  } else {
    t.est_t = FenchelCoupling(reg, probe, Scale(before.dual_sum, -1.0 / before.eta));
  }
  t.est_next = after.Energy(probe);
  t.armeasure = after.ArMeasure(probe);
  t.inner = Dot(g, Sub(before.leading, probe));
  t.cross = Dot(Sub(g, before.last_feedback), Sub(before.leading, after.base()));
  t.breg_next_lead = divergence(after.base(), before.leading, before.leading_dual);
  t.breg_lead_base = divergence(before.leading, before.base, before.base_dual);
  return t;
}

BoundTerms RvuBoundTerms(const PlayerTrace& trace, const Learner& learner,
                         ConstSpan comparator) {
  const size_t T = trace.played.size();
  if (trace.feedback.size() != T || trace.eta.size() != T + 1) {
    throw DimensionError("RvuBoundTerms: inconsistent trace lengths");
  }
  const Regularizer& reg = learner.regularizer();
  BoundTerms out;
  Vec g_prev(reg.dim(), 0.0);
  for (size_t t = 0; t < T; ++t) {
    out.lhs += Dot(trace.feedback[t], Sub(trace.played[t], comparator));
    const double d = reg.DualNorm(Sub(trace.feedback[t], g_prev));
    out.rhs += d * d / trace.eta[t];
    if (t >= 1) {
      const double m = reg.PrimalNorm(Sub(trace.played[t], trace.played[t - 1]));
      out.rhs -= trace.eta[t - 1] / 8.0 * m * m;
    }
    g_prev = trace.feedback[t];
  }
  out.rhs += trace.eta[T] * learner.ArMeasure(comparator);
  return out;
}

}  // namespace adaptplay
