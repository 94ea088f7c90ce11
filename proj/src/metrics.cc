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

#include "adaptplay/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adaptplay {
namespace {

double FrankWolfeGap(const ActionSet& set, ConstSpan x, ConstSpan g) {
  const Vec s = set.LinearMinimizer(g);
  return Dot(g, Sub(x, s));
}

struct StartResult {
  Vec x;
  double fx;
  double gap;
  int iterations;
};

StartResult RunAcceleratedPg(const ActionSet& set, const std::function<double(ConstSpan)>& f,
                             const std::function<Vec(ConstSpan)>& grad, Vec start,
                             const OracleOptions& opt) {
  Vec x = set.Project(start);
  double fx = f(x);
  Vec gx = grad(x);
  double gap = FrankWolfeGap(set, x, gx);
  Vec y = x;
  double momentum = 1.0;
  double lip = 1.0;
  int it = 0;
  for (; it < opt.max_iterations && gap > opt.tolerance; ++it) {
    const double fy = f(y);
    const Vec gy = grad(y);
    Vec z;
    double fz = 0.0;
    for (int ls = 0; ls < 60; ++ls) {
      Vec step = y;
      Axpy(-1.0 / lip, gy, step);
      z = set.Project(step);
      fz = f(z);
      const Vec d = Sub(z, y);
      const double model = fy + Dot(gy, d) + 0.5 * lip * Dot(d, d);
      if (fz <= model + 1e-13 * (std::abs(fy) + 1.0)) break;
      lip *= 2.0;
    }
    if (fz > fx) {
      // Function-value restart: drop momentum and retry from x. A plain
      // projected step from x that still ascends means rounding has won.
      if (momentum == 1.0 && y == x) break;
      y = x;
      momentum = 1.0;
      continue;
    }
    const double next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    Vec ny = z;
    Axpy((momentum - 1.0) / next, Sub(z, x), ny);
    y = set.Project(ny);
    x = std::move(z);
    fx = fz;
    momentum = next;
    lip *= 0.9;
    gx = grad(x);
    gap = FrankWolfeGap(set, x, gx);
  }
  return StartResult{x, fx, std::max(gap, 0.0), it};
}

}  // namespace

OracleResult MinimizeConvex(const ActionSet& set, const std::function<double(ConstSpan)>& f,
                            const std::function<Vec(ConstSpan)>& grad,
                            const OracleOptions& options, const std::optional<Vec>& warm_start) {
  if (!set.bounded()) throw ConfigError("MinimizeConvex: comparator set must be bounded");
  std::mt19937_64 rng(options.seed);
  OracleResult best;
  best.value = std::numeric_limits<double>::infinity();
  best.certified_gap = std::numeric_limits<double>::infinity();
  auto consider = [&](const StartResult& r) {
    best.iterations += r.iterations;
    if (r.fx < best.value) {
      best.value = r.fx;
      best.minimizer = r.x;
      best.certified_gap = r.gap;
    }
  };
  if (warm_start) consider(RunAcceleratedPg(set, f, grad, *warm_start, options));
  for (int s = 0; s < options.restarts; ++s) {
    if (best.certified_gap <= options.tolerance) break;
    consider(RunAcceleratedPg(set, f, grad, set.Sample(rng), options));
  }
  return best;
}

// ---------------------------------------------------------------------------
// RegretLedger

RegretLedger::RegretLedger(const GameDefinition& game, LedgerOptions options)
    : game_(&game), options_(options) {
  const int n = game.players();
  cumulative_loss_.assign(n, 0.0);
  warm_.resize(n);
  if (game.own_linear) {
    for (const ActionSet& s : game.action_sets) summed_grad_.emplace_back(s.dim(), 0.0);
  } else {
    if (!game.opponent_summary || !game.summary_loss || !game.summary_grad) {
      throw ConfigError(game.name + ": non-linear game without opponent summary");
    }
    blocks_.resize(n);
  }
}

void RegretLedger::Record(const JointAction& played, const std::vector<Vec>& feedback) {
  const int n = players();
  if (static_cast<int>(played.size()) != n || static_cast<int>(feedback.size()) != n) {
    throw DimensionError("RegretLedger::Record: player count mismatch");
  }
  for (int i = 0; i < n; ++i) {
    cumulative_loss_[i] += game_->loss(i, played);
    if (game_->own_linear) {
      Axpy(1.0, feedback[i], summed_grad_[i]);
      continue;
    }
    Vec s = game_->opponent_summary(i, played);
    std::vector<Block>& blocks = blocks_[i];
    bool merged = false;
    if (!blocks.empty() && options_.merge_tolerance > 0.0) {
      Block& b = blocks.back();
      if (NormInf(Sub(s, b.first)) <= options_.merge_tolerance) {
        b.count += 1.0;
        Axpy(1.0, s, b.sum);
        merged = true;
      }
    }
    if (!merged) blocks.push_back(Block{1.0, s, s});
  }
  ++steps_;
}

size_t RegretLedger::StoredBlocks(int player) const {
  return game_->own_linear ? 1 : blocks_[player].size();
}

double RegretLedger::ComparatorLoss(int player, ConstSpan p) const {
  if (game_->own_linear) return Dot(p, summed_grad_[player]);
  double total = 0.0;
  for (const Block& b : blocks_[player]) {
    const Vec mean = Scale(b.sum, 1.0 / b.count);
    total += b.count * game_->summary_loss(player, p, mean);
  }
  return total;
}

RegretValue RegretLedger::IndividualRegret(int player, const Comparator& comparator) const {
  if (player < 0 || player >= players()) throw DimensionError("IndividualRegret: bad player");
  RegretValue out;
  out.steps = steps_;
  const double realized = cumulative_loss_[player];
  const ActionSet& own = game_->action_sets[player];

  if (const auto* pt = std::get_if<ComparatorPoint>(&comparator)) {
    out.best_response = pt->point;
    out.regret = realized - ComparatorLoss(player, pt->point);
    return out;
  }
  if (const auto* samples = std::get_if<ComparatorSamples>(&comparator)) {
    if (samples->points.empty()) throw ConfigError("IndividualRegret: empty comparator set");
    double best = std::numeric_limits<double>::infinity();
    for (const Vec& p : samples->points) {
      const double v = ComparatorLoss(player, p);
      if (v < best) {
        best = v;
        out.best_response = p;
      }
    }
    out.regret = realized - best;
    return out;
  }
  const ActionSet* set = &own;
  if (const auto* box = std::get_if<ComparatorBox>(&comparator)) set = &box->box;
  if (!set->bounded()) {
    throw ConfigError("IndividualRegret: unbounded comparator set; configure a box");
  }
  if (game_->own_linear) {
    out.best_response = set->LinearMinimizer(summed_grad_[player]);
    out.regret = realized - Dot(out.best_response, summed_grad_[player]);
    return out;
  }
  const std::vector<Block>& blocks = blocks_[player];
  std::vector<Vec> means;
  std::vector<double> counts;
  means.reserve(blocks.size());
  for (const Block& b : blocks) {
    means.push_back(Scale(b.sum, 1.0 / b.count));
    counts.push_back(b.count);
  }
  auto f = [&](ConstSpan p) {
    double total = 0.0;
    for (size_t b = 0; b < means.size(); ++b) {
      total += counts[b] * game_->summary_loss(player, p, means[b]);
    }
    return total;
  };
  auto g = [&](ConstSpan p) {
    Vec total(p.size(), 0.0);
    for (size_t b = 0; b < means.size(); ++b) {
      Axpy(counts[b], game_->summary_grad(player, p, means[b]), total);
    }
    return total;
  };
  OracleOptions opt = options_.oracle;
  opt.tolerance *= std::max<double>(1.0, static_cast<double>(steps_));
  const OracleResult r = MinimizeConvex(*set, f, g, opt, warm_[player]);
  warm_[player] = r.minimizer;
  out.best_response = r.minimizer;
  out.oracle_gap = r.certified_gap;
  out.regret = realized - r.value;
  return out;
}

double SocialRegret(const std::vector<RegretValue>& regrets) {
  double total = 0.0;
  for (const RegretValue& r : regrets) {
    if (r.steps != regrets.front().steps) {
      throw DimensionError("SocialRegret: ledgers cover different horizons");
    }
    total += r.regret;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Gap function and best responses

double GapFunction(const GameDefinition& game, const JointAction& x, int player,
                   const Comparator& comparator, const OracleOptions& options) {
  RegretLedger ledger(game, LedgerOptions{options, 0.0});
  std::vector<Vec> fb;
  for (int i = 0; i < game.players(); ++i) fb.push_back(game.grad(i, x));
  ledger.Record(x, fb);
  return ledger.IndividualRegret(player, comparator).regret;
}

BestResponse BestResponseSet(const GameDefinition& game, int player, const JointAction& fixed,
                             double tie_tol, const OracleOptions& options) {
  BestResponse out;
  const ActionSet& set = game.action_sets[player];
  const Vec g = game.grad(player, fixed);
  if (game.own_linear && set.kind() == ActionSet::Kind::kSimplex) {
    const double m = *std::min_element(g.begin(), g.end());
    for (int k = 0; k < static_cast<int>(g.size()); ++k) {
      if (g[k] <= m + tie_tol) out.face.push_back(k);
    }
    Vec p(g.size(), 0.0);
    for (int k : out.face) p[k] = 1.0 / out.face.size();
    out.point = p;
    return out;
  }
  const Vec summary = game.opponent_summary(player, fixed);
  auto f = [&](ConstSpan p) { return game.summary_loss(player, p, summary); };
  auto gr = [&](ConstSpan p) { return game.summary_grad(player, p, summary); };
  OracleOptions opt = options;
  opt.max_iterations = std::max(opt.max_iterations, 5000);
  const OracleResult r = MinimizeConvex(set, f, gr, opt, fixed[player]);
  out.point = r.minimizer;
  out.certified_gap = r.certified_gap;
  Vec step = r.minimizer;
  Axpy(-1.0, gr(r.minimizer), step);
  out.stationarity = Norm2(Sub(r.minimizer, set.Project(step)));
  return out;
}

double DistanceToFace(ConstSpan x, const std::vector<int>& face) {
  double outside = 0.0;
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    if (std::find(face.begin(), face.end(), k) == face.end()) outside += std::abs(x[k]);
  }
  return 2.0 * outside;
}

// ---------------------------------------------------------------------------
// Sequences

SumCheck AdaptiveSumCheck(ConstSpan a) {
  SumCheck out;
  double prefix = 0.0;
  for (double v : a) {
    prefix += v;
    if (!(prefix > 0.0)) throw PreconditionError("AdaptiveSumCheck: non-positive prefix sum");
    out.lhs += v / std::sqrt(prefix);
  }
  out.rhs = 2.0 * std::sqrt(prefix);
  return out;
}

double VecNorm(ConstSpan v, NormKind kind) {
  switch (kind) {
    case NormKind::kL1:
      return Norm1(v);
    case NormKind::kL2:
      return Norm2(v);
    case NormKind::kLinf:
      return NormInf(v);
  }
  return 0.0;
}

Vec DistanceToPoint(const std::vector<Vec>& trajectory, ConstSpan target, NormKind kind) {
  Vec out;
  out.reserve(trajectory.size());
  for (const Vec& x : trajectory) {
    if (x.size() != target.size()) throw DimensionError("DistanceToPoint: dimension mismatch");
    out.push_back(VecNorm(Sub(x, target), kind));
  }
  return out;
}

}  // namespace adaptplay
