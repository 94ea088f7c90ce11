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

#include "adaptplay/games.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace adaptplay {
namespace {

void CheckPlayer(const GameDefinition& g, int player) {
  if (player < 0 || player >= g.players()) {
    throw DimensionError(g.name + ": player index out of range");
  }
}

void CheckJoint(const GameDefinition& g, const JointAction& x) {
  if (static_cast<int>(x.size()) != g.players()) {
    throw DimensionError(g.name + ": joint action has wrong player count");
  }
  for (int i = 0; i < g.players(); ++i) {
    if (static_cast<int>(x[i].size()) != g.action_sets[i].dim()) {
      throw DimensionError(g.name + ": action dimension mismatch for player " +
                           std::to_string(i));
    }
  }
}

double EstimateLipschitz(const GameDefinition& game, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double best = 0.0;
  for (int s = 0; s < 200; ++s) {
    const JointAction a = SampleJointAction(game, rng);
    const JointAction b = SampleJointAction(game, rng);
    double dv = 0.0, dx = 0.0;
    for (int i = 0; i < game.players(); ++i) {
      const Vec d = Sub(game.grad(i, a), game.grad(i, b));
      dv += Dot(d, d);
      const Vec e = Sub(a[i], b[i]);
      dx += Dot(e, e);
    }
    if (dx > 0.0) best = std::max(best, std::sqrt(dv / dx));
  }
  return best;
}

// Expected loss of a game where every player has two pure strategies and
// player i's loss table is tensor[i][a_0 * 4 + a_1 * 2 + a_2].
using Table3 = std::array<double, 8>;

double Expected3(const Table3& table, const JointAction& x) {
  double s = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) s += table[a * 4 + b * 2 + c] * x[0][a] * x[1][b] * x[2][c];
  return s;
}

Vec Contract3(const Table3& table, const JointAction& x, int player) {
  Vec out(2, 0.0);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const std::array<int, 3> idx{a, b, c};
        double w = table[a * 4 + b * 2 + c];
        for (int j = 0; j < 3; ++j) {
          if (j != player) w *= x[j][idx[j]];
        }
        out[idx[player]] += w;
      }
  return out;
}

}  // namespace

double GameDefinition::Loss(int player, const JointAction& x) const {
  CheckPlayer(*this, player);
  CheckJoint(*this, x);
  return loss(player, x);
}

Vec GameDefinition::Grad(int player, const JointAction& x) const {
  CheckPlayer(*this, player);
  CheckJoint(*this, x);
  return grad(player, x);
}

void InstallDefaultSummary(GameDefinition& game) {
  if (game.opponent_summary) return;
  const std::vector<ActionSet> sets = game.action_sets;
  auto unflatten = [sets](int player, ConstSpan p, ConstSpan summary) {
    JointAction x;
    size_t off = 0;
    for (int j = 0; j < static_cast<int>(sets.size()); ++j) {
      const size_t d = sets[j].dim();
      if (j == player) {
        x.emplace_back(p.begin(), p.end());
      } else {
        x.emplace_back(summary.begin() + off, summary.begin() + off + d);
      }
      off += d;
    }
    return x;
  };
  game.opponent_summary = [](int player, const JointAction& x) {
    Vec flat;
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      if (j == player) {
        flat.insert(flat.end(), x[j].size(), 0.0);
      } else {
        flat.insert(flat.end(), x[j].begin(), x[j].end());
      }
    }
    return flat;
  };
  auto loss = game.loss;
  auto grad = game.grad;
  game.summary_loss = [loss, unflatten](int player, ConstSpan p, ConstSpan s) {
    return loss(player, unflatten(player, p, s));
  };
  game.summary_grad = [grad, unflatten](int player, ConstSpan p, ConstSpan s) {
    return grad(player, unflatten(player, p, s));
  };
}

GameDefinition BuildBilinear(double lower, double upper) {
  GameDefinition g;
  g.name = "bilinear";
  g.action_sets = {ActionSet::Box({lower}, {upper}), ActionSet::Box({lower}, {upper})};
  g.loss = [](int i, const JointAction& x) {
    const double v = x[0][0] * x[1][0];
    return i == 0 ? v : -v;
  };
  g.grad = [](int i, const JointAction& x) {
    return i == 0 ? Vec{x[1][0]} : Vec{-x[0][0]};
  };
  g.own_linear = true;
  g.zero_sum = true;
  if (lower <= 0.0 && 0.0 <= upper) g.nash = JointAction{{0.0}, {0.0}};
  g.lipschitz = 1.0;
  InstallDefaultSummary(g);
  return g;
}

GameDefinition BuildMatrixZeroSum(std::vector<Vec> m) {
  if (m.empty() || m[0].empty()) throw DimensionError("matrix game: empty matrix");
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  for (const Vec& r : m) {
    if (static_cast<int>(r.size()) != cols) throw DimensionError("matrix game: ragged matrix");
  }
  GameDefinition g;
  g.name = "zerosum";
  g.action_sets = {ActionSet::Simplex(rows), ActionSet::Simplex(cols)};
  auto row_payoff = [m, rows, cols](ConstSpan phi) {
    Vec out(rows, 0.0);
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < cols; ++b) out[a] += m[a][b] * phi[b];
    return out;
  };
  auto col_payoff = [m, rows, cols](ConstSpan theta) {
    Vec out(cols, 0.0);
    for (int a = 0; a < rows; ++a)
      for (int b = 0; b < cols; ++b) out[b] -= m[a][b] * theta[a];
    return out;
  };
  g.grad = [row_payoff, col_payoff](int i, const JointAction& x) {
    return i == 0 ? row_payoff(x[1]) : col_payoff(x[0]);
  };
  g.loss = [row_payoff](int i, const JointAction& x) {
    const double v = Dot(x[0], row_payoff(x[1]));
    return i == 0 ? v : -v;
  };
  g.own_linear = true;
  g.zero_sum = true;
  InstallDefaultSummary(g);
  g.lipschitz = EstimateLipschitz(g, 0x5eed);
  return g;
}

std::vector<Vec> RandomMatrix(int rows, int cols, std::uint64_t seed, double range) {
  if (rows < 1 || cols < 1) throw DimensionError("RandomMatrix: rows, cols must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<Vec> m(rows, Vec(cols));
  for (Vec& r : m)
    for (double& v : r) v = u(rng);
  return m;
}

GameDefinition BuildRandomZeroSum(int rows, int cols, std::uint64_t seed, double range) {
  return BuildMatrixZeroSum(RandomMatrix(rows, cols, seed, range));
}

KellyParams DrawKellyParams(int resources, int bidders, std::uint64_t seed) {
  if (resources < 1 || bidders < 1) throw DimensionError("Kelly: K, N must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> q(4.0, 6.0);
  std::uniform_real_distribution<double> b(5.0, 10.0);
  KellyParams p;
  p.quantity.resize(resources);
  p.barrier.assign(resources, 1.0);
  p.gain.resize(bidders);
  p.budget.resize(bidders);
  for (double& v : p.quantity) v = q(rng);
  for (double& v : p.gain) v = q(rng);
  for (double& v : p.budget) v = b(rng);
  return p;
}

double KellyAllocation(const KellyParams& params, const JointAction& x, int bidder,
                       int resource) {
  double total = params.barrier[resource];
  for (const Vec& xi : x) total += xi[resource];
  return params.quantity[resource] * x[bidder][resource] / total;
}

GameDefinition BuildKelly(const KellyParams& params) {
  const int K = static_cast<int>(params.quantity.size());
  const int N = static_cast<int>(params.gain.size());
  if (K < 1 || N < 1 || static_cast<int>(params.barrier.size()) != K ||
      static_cast<int>(params.budget.size()) != N) {
    throw DimensionError("Kelly: inconsistent parameter sizes");
  }
  GameDefinition g;
  g.name = "kelly";
  for (int i = 0; i < N; ++i) g.action_sets.push_back(ActionSet::Budget(K, params.budget[i]));

  // Summary: s_k = sum_{j != i} x_{jk}.
  g.opponent_summary = [K](int i, const JointAction& x) {
    Vec s(K, 0.0);
    for (int j = 0; j < static_cast<int>(x.size()); ++j) {
      if (j == i) continue;
      for (int k = 0; k < K; ++k) s[k] += x[j][k];
    }
    return s;
  };
  g.summary_loss = [params, K](int i, ConstSpan p, ConstSpan s) {
    double loss = 0.0;
    for (int k = 0; k < K; ++k) {
      const double denom = params.barrier[k] + p[k] + s[k];
      loss += p[k] - params.gain[i] * params.quantity[k] * p[k] / denom;
    }
    return loss;
  };
  g.summary_grad = [params, K](int i, ConstSpan p, ConstSpan s) {
    Vec out(K);
    for (int k = 0; k < K; ++k) {
      const double rest = params.barrier[k] + s[k];
      const double denom = rest + p[k];
      out[k] = 1.0 - params.gain[i] * params.quantity[k] * rest / (denom * denom);
    }
    return out;
  };
  auto summary = g.opponent_summary;
  auto sl = g.summary_loss;
  auto sg = g.summary_grad;
  g.loss = [summary, sl](int i, const JointAction& x) { return sl(i, x[i], summary(i, x)); };
  g.grad = [summary, sg](int i, const JointAction& x) { return sg(i, x[i], summary(i, x)); };
  g.lipschitz = EstimateLipschitz(g, 0x5eed);
  return g;
}

GameDefinition BuildKelly(int resources, int bidders, std::uint64_t seed) {
  return BuildKelly(DrawKellyParams(resources, bidders, seed));
}

GameDefinition BuildJordan() {
  // Strategy 0/1 per player; -1 for the desired (mis)match, +1 otherwise.
  std::array<Table3, 3> tables{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        const int idx = a * 4 + b * 2 + c;
        tables[0][idx] = (a == b) ? -1.0 : 1.0;
        tables[1][idx] = (b == c) ? -1.0 : 1.0;
        tables[2][idx] = (c != a) ? -1.0 : 1.0;
      }
  GameDefinition g;
  g.name = "jordan";
  g.action_sets = {ActionSet::Simplex(2), ActionSet::Simplex(2), ActionSet::Simplex(2)};
  g.loss = [tables](int i, const JointAction& x) { return Expected3(tables[i], x); };
  g.grad = [tables](int i, const JointAction& x) { return Contract3(tables[i], x, i); };
  g.own_linear = true;
  g.nash = JointAction{{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}};
  InstallDefaultSummary(g);
  g.lipschitz = EstimateLipschitz(g, 0x5eed);
  return g;
}

JointAction SampleJointAction(const GameDefinition& game, std::mt19937_64& rng) {
  JointAction x;
  x.reserve(game.players());
  for (const ActionSet& s : game.action_sets) x.push_back(s.Sample(rng));
  return x;
}

double GradientCheck(const GameDefinition& game, int player, const JointAction& x,
                     double step) {
  const Vec g = game.Grad(player, x);
  double worst = 0.0;
  for (size_t k = 0; k < x[player].size(); ++k) {
    JointAction plus = x, minus = x;
    plus[player][k] += step;
    minus[player][k] -= step;
    const double fd = (game.loss(player, plus) - game.loss(player, minus)) / (2.0 * step);
    const double err = std::abs(fd - g[k]) / std::max(1.0, std::abs(g[k]));
    worst = std::max(worst, err);
  }
  return worst;
}

double VsProbe(const GameDefinition& game, StabilityForm form, int samples,
               std::uint64_t seed) {
  if (form == StabilityForm::kVariational && !game.nash) {
    throw ConfigError(game.name + ": variational-stability probe needs a Nash point");
  }
  std::mt19937_64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const JointAction x = SampleJointAction(game, rng);
    const JointAction ref = form == StabilityForm::kVariational
                                ? *game.nash
                                : SampleJointAction(game, rng);
    double v = 0.0;
    for (int i = 0; i < game.players(); ++i) {
      Vec gi = game.grad(i, x);
      if (form == StabilityForm::kMonotone) gi = Sub(gi, game.grad(i, ref));
      v += Dot(gi, Sub(x[i], ref[i]));
    }
    best = std::min(best, v);
  }
  return best;
}

}  // namespace adaptplay
