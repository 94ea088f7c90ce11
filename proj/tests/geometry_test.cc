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

#include <cmath>
#include <limits>
#include <random>

#include "adaptplay/errors.h"
#include "adaptplay/geometry.h"
#include "doctest.h"

namespace adaptplay {
namespace {

// Brute-force argmin of |x - y|^2 over a 2-d box on a regular grid.
Vec GridProjectBox2(const Vec& lo, const Vec& hi, const Vec& y, double step) {
  Vec best = lo;
  double best_d = std::numeric_limits<double>::infinity();
  for (double a = lo[0]; a <= hi[0] + 1e-12; a += step) {
    for (double b = lo[1]; b <= hi[1] + 1e-12; b += step) {
      const double d = (a - y[0]) * (a - y[0]) + (b - y[1]) * (b - y[1]);
      if (d < best_d) {
        best_d = d;
        best = {a, b};
      }
    }
  }
  return best;
}

TEST_CASE("Bregman divergence examples") {
  const auto quad = Regularizer::Quadratic(ActionSet::Unconstrained(2));
  CHECK(Bregman(quad, Vec{1, 0}, Vec{0, 0}) == doctest::Approx(0.5).epsilon(1e-15));

  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(2));
  CHECK(Bregman(ent, Vec{0.3, 0.7}, Vec{0.3, 0.7}) == doctest::Approx(0.0));

  const double kl = 0.5 * std::log(0.5 / 0.25) + 0.5 * std::log(0.5 / 0.75);
  CHECK(Bregman(ent, Vec{0.5, 0.5}, Vec{0.25, 0.75}) == doctest::Approx(kl).epsilon(1e-12));
  CHECK(kl == doctest::Approx(0.14384).epsilon(1e-4));
}

TEST_CASE("Bregman rejects boundary bases under the entropy") {
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(2));
  CHECK_THROWS_AS(Bregman(ent, Vec{0.5, 0.5}, Vec{1.0, 0.0}), BoundaryError);
  CHECK_NOTHROW(Bregman(ent, Vec{1.0, 0.0}, Vec{1.0, 0.0}));
  CHECK_THROWS_AS(Bregman(ent, Vec{0.5, 0.5, 0.0}, Vec{0.5, 0.5}), DimensionError);
}

TEST_CASE("Fenchel conjugate examples") {
  CHECK(FenchelConjugate(Regularizer::Quadratic(ActionSet::Unconstrained(2)), Vec{0, 0}) ==
        doctest::Approx(0.0));
  const double lse = std::log(std::exp(0.0) + std::exp(0.0));
  CHECK(FenchelConjugate(Regularizer::NegativeEntropy(ActionSet::Simplex(2)), Vec{0, 0}) ==
        doctest::Approx(lse).epsilon(1e-14));

  // Box conjugate by grid search of max <y, x> - |x|^2 / 2.
  const auto box = Regularizer::Quadratic(ActionSet::Box({-1, -1}, {1, 1}));
  double best = -std::numeric_limits<double>::infinity();
  for (double a = -1.0; a <= 1.0 + 1e-12; a += 1e-3) {
    for (double b = -1.0; b <= 1.0 + 1e-12; b += 1e-3) {
      best = std::max(best, 3.0 * a - 0.5 * (a * a + b * b));
    }
  }
  CHECK(FenchelConjugate(box, Vec{3, 0}) == doctest::Approx(best).epsilon(1e-6));
  CHECK(FenchelConjugate(box, Vec{3, 0}) == doctest::Approx(2.5));
}

TEST_CASE("Fenchel coupling examples") {
  const auto quad = Regularizer::Quadratic(ActionSet::Unconstrained(2));
  CHECK(FenchelCoupling(quad, Vec{0.4, -0.2}, Vec{0.4, -0.2}) == doctest::Approx(0.0));
  const Vec p = {1, 0}, y = {0, 0};
  const double direct = quad.Value(p) + FenchelConjugate(quad, y) - Dot(y, p);
  CHECK(FenchelCoupling(quad, p, y) == doctest::Approx(direct));
  CHECK(FenchelCoupling(quad, p, y) == doctest::Approx(0.5));
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(2));
  CHECK(FenchelCoupling(ent, Vec{0.5, 0.5}, Vec{0, 0}) == doctest::Approx(0.0));
}

TEST_CASE("Mirror map examples") {
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(3));
  for (double v : MirrorMap(ent, Vec{0, 0, 0})) CHECK(v == doctest::Approx(1.0 / 3.0));
  const auto free = Regularizer::Quadratic(ActionSet::Unconstrained(2));
  CHECK(MirrorMap(free, Vec{2, -1}) == Vec{2, -1});

  const auto box = Regularizer::Quadratic(ActionSet::Box({-4, -4}, {8, 8}));
  const Vec got = MirrorMap(box, Vec{10, -6});
  const Vec grid = GridProjectBox2({-4, -4}, {8, 8}, {10, -6}, 1e-3 * 12);
  CHECK(got[0] == doctest::Approx(grid[0]).epsilon(1e-9));
  CHECK(got[1] == doctest::Approx(grid[1]).epsilon(1e-9));
  CHECK(got == Vec{8, -4});
}

TEST_CASE("Mirror map stays on the simplex for extreme duals") {
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(4));
  const Vec x = MirrorMap(ent, Vec{1e4, -1e4, 0, 700});
  double sum = 0;
  for (double v : x) {
    CHECK(v >= -1e-12);
    sum += v;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(MirrorMap(ent, Vec{std::nan(""), 0, 0, 0}), ParameterError);
}

TEST_CASE("Prox step examples") {
  const auto free = Regularizer::Quadratic(ActionSet::Unconstrained(2));
  const Vec a = ProxStep(free, Vec{0, 0}, Vec{1, -2}, 2.0);
  CHECK(a[0] == doctest::Approx(-0.5));
  CHECK(a[1] == doctest::Approx(1.0));

  // Multiplicative weights by hand: q_k exp(-g_k) renormalized.
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(2));
  const Vec b = ProxStep(ent, Vec{0.5, 0.5}, Vec{std::log(4.0), 0}, 1.0);
  const double w0 = 0.5 * std::exp(-std::log(4.0)), w1 = 0.5;
  CHECK(b[0] == doctest::Approx(w0 / (w0 + w1)).epsilon(1e-12));
  CHECK(b[0] == doctest::Approx(0.2).epsilon(1e-12));

  const auto box = Regularizer::Quadratic(ActionSet::Box({-4, -4}, {8, 8}));
  const Vec c = ProxStep(box, Vec{8, 8}, Vec{-7, 0}, 1.0);
  const Vec grid = GridProjectBox2({-4, -4}, {8, 8}, {15, 8}, 1e-3 * 12);
  CHECK(c[0] == doctest::Approx(grid[0]).epsilon(1e-9));
  CHECK(c[1] == doctest::Approx(grid[1]).epsilon(1e-9));
  CHECK(c == Vec{8, 8});

  CHECK_THROWS_AS(ProxStep(free, Vec{0, 0}, Vec{1, 1}, 0.0), ParameterError);
  CHECK_THROWS_AS(ProxStep(free, Vec{0, 0}, Vec{1, 1}, -1.0), ParameterError);
}

TEST_CASE("Prox step equals the mirror map of the shifted gradient") {
  std::mt19937_64 rng(5);
  const auto ent = Regularizer::NegativeEntropy(ActionSet::Simplex(6));
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int s = 0; s < 200; ++s) {
    Vec y(6), g(6);
    for (int k = 0; k < 6; ++k) {
      y[k] = normal(rng);
      g[k] = normal(rng);
    }
    const double eta = 0.5 + s * 0.01;
    const Vec base = MirrorMap(ent, y);
    const Vec via_prox = ProxStep(ent, base, g, eta);
    Vec shifted = ent.Gradient(base);
    Axpy(-1.0 / eta, g, shifted);
    const Vec via_mirror = MirrorMap(ent, shifted);
    for (int k = 0; k < 6; ++k) CHECK(std::abs(via_prox[k] - via_mirror[k]) <= 1e-9);
  }
}

TEST_CASE("Simplex projection examples") {
  CHECK(SimplexProjection(Vec{1, 0}) == Vec{1, 0});
  CHECK(SimplexProjection(Vec{0.5, 0.5, 0}) == Vec{0.5, 0.5, 0});
  // Line search along the segment from (1, 0) to (0, 1).
  double best_a = 0, best_d = std::numeric_limits<double>::infinity();
  for (double a = 0.0; a <= 1.0 + 1e-12; a += 1e-4) {
    const double d = (a - 2) * (a - 2) + (1 - a) * (1 - a);
    if (d < best_d) {
      best_d = d;
      best_a = a;
    }
  }
  const Vec p = SimplexProjection(Vec{2, 0});
  CHECK(p[0] == doctest::Approx(best_a).epsilon(1e-4));
  CHECK(p == Vec{1, 0});
}

TEST_CASE("Simplex projection is idempotent and feasible") {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int s = 0; s < 500; ++s) {
    Vec v(7);
    for (double& x : v) x = normal(rng);
    const Vec p = SimplexProjection(v);
    CHECK(ActionSet::Simplex(7).Contains(p));
    const Vec q = SimplexProjection(p);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(p[k] - q[k]) <= 1e-12);
  }
}

TEST_CASE("Projections land in their sets") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 10.0);
  const std::vector<ActionSet> sets = {
      ActionSet::Box({-1, 0, 2}, {1, 4, 3}), ActionSet::Ball({1, -1, 0}, 0.5),
      ActionSet::Simplex(3), ActionSet::Budget(3, 2.5), ActionSet::Unconstrained(3)};
  for (const ActionSet& set : sets) {
    for (int s = 0; s < 300; ++s) {
      Vec y(3);
      for (double& v : y) v = normal(rng);
      CHECK(set.Contains(set.Project(y)));
      CHECK(set.Contains(set.Sample(rng)));
    }
  }
}

TEST_CASE("Budget projection matches a brute-force search") {
  const ActionSet budget = ActionSet::Budget(2, 1.5);
  std::mt19937_64 rng(21);
  std::normal_distribution<double> normal(0.0, 2.0);
  for (int s = 0; s < 20; ++s) {
    const Vec y = {normal(rng), normal(rng)};
    double best = std::numeric_limits<double>::infinity();
    for (double a = 0; a <= 1.5 + 1e-12; a += 1e-3) {
      for (double b = 0; a + b <= 1.5 + 1e-12; b += 1e-3) {
        best = std::min(best, (a - y[0]) * (a - y[0]) + (b - y[1]) * (b - y[1]));
      }
    }
    const Vec p = budget.Project(y);
    const double got = (p[0] - y[0]) * (p[0] - y[0]) + (p[1] - y[1]) * (p[1] - y[1]);
    CHECK(got <= best + 1e-12);
    CHECK(got >= best - 1e-2);
  }
}

TEST_CASE("Linear minimizers") {
  CHECK(ActionSet::Simplex(3).LinearMinimizer(Vec{0.3, -1, 2}) == Vec{0, 1, 0});
  CHECK(ActionSet::Box({-1, -2}, {1, 2}).LinearMinimizer(Vec{1, -1}) == Vec{-1, 2});
  CHECK(ActionSet::Budget(2, 3).LinearMinimizer(Vec{1, 2}) == Vec{0, 0});
  CHECK(ActionSet::Budget(2, 3).LinearMinimizer(Vec{1, -2}) == Vec{0, 3});
  const Vec b = ActionSet::Ball({0, 0}, 2).LinearMinimizer(Vec{3, 4});
  CHECK(b[0] == doctest::Approx(-1.2));
  CHECK(b[1] == doctest::Approx(-1.6));
  CHECK_THROWS_AS(ActionSet::Unconstrained(2).LinearMinimizer(Vec{1, 0}), ConfigError);
}

TEST_CASE("Entropy requires a simplex domain") {
  CHECK_THROWS_AS(Regularizer::NegativeEntropy(ActionSet::Box({0}, {1})), ConfigError);
}

TEST_CASE("Strong convexity relative to the declared norm") {
  std::mt19937_64 rng(12);
  const std::vector<Regularizer> regs = {
      Regularizer::Quadratic(ActionSet::Ball({0, 0, 0}, 3)),
      Regularizer::NegativeEntropy(ActionSet::Simplex(5))};
  for (const Regularizer& reg : regs) {
    for (int s = 0; s < 1000; ++s) {
      const Vec x = reg.domain().Sample(rng), y = reg.domain().Sample(rng);
      const double n = reg.PrimalNorm(Sub(y, x));
      CHECK(reg.Value(y) >= reg.Value(x) + Dot(reg.Gradient(x), Sub(y, x)) + 0.5 * n * n - 1e-8);
    }
  }
}

TEST_CASE("Three-point identities on random samples") {
  std::mt19937_64 rng(77);
  std::normal_distribution<double> normal(0.0, 1.5);
  const std::vector<Regularizer> regs = {
      Regularizer::Quadratic(ActionSet::Box({-1, -1, -1}, {1, 2, 3})),
      Regularizer::Quadratic(ActionSet::Simplex(3)),
      Regularizer::NegativeEntropy(ActionSet::Simplex(3))};
  for (const Regularizer& reg : regs) {
    for (int s = 0; s < 1000; ++s) {
      const Vec p = reg.domain().Sample(rng), x = reg.domain().Sample(rng),
                x2 = reg.domain().Sample(rng);
      const double lhs = Dot(Sub(reg.Gradient(x2), reg.Gradient(x)), Sub(x, p));
      const double a = Bregman(reg, p, x2), b = Bregman(reg, p, x), c = Bregman(reg, x, x2);
      CHECK(std::abs(lhs - (a - b - c)) <= 1e-8 * (1 + std::abs(a) + std::abs(b) + std::abs(c)));

      const Vec y = {normal(rng), normal(rng), normal(rng)};
      const Vec y2 = {normal(rng), normal(rng), normal(rng)};
      const Vec q = MirrorMap(reg, y);
      const double fa = FenchelCoupling(reg, p, y2), fb = FenchelCoupling(reg, p, y),
                   fc = FenchelCoupling(reg, q, y2);
      CHECK(std::abs(fa - fb - fc - Dot(Sub(y2, y), Sub(q, p))) <=
            1e-8 * (1 + std::abs(fa) + std::abs(fb) + std::abs(fc)));

      // F >= D >= |.|^2 / 2 and F(p, grad h(x)) = D(p, x).
      const double f = FenchelCoupling(reg, p, y), d = Bregman(reg, p, q);
      const double n = reg.PrimalNorm(Sub(p, q));
      CHECK(f >= d - 1e-9);
      CHECK(d >= 0.5 * n * n - 1e-9);
      CHECK(std::abs(FenchelCoupling(reg, p, reg.Gradient(x)) - Bregman(reg, p, x)) <=
            1e-9 * (1 + std::abs(b)));
    }
  }
}

TEST_CASE("Prox optimality residual") {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> normal(0.0, 2.0);
  const std::vector<Regularizer> regs = {
      Regularizer::Quadratic(ActionSet::Box({-4, -4}, {8, 8})),
      Regularizer::Quadratic(ActionSet::Ball({0, 1}, 2)),
      Regularizer::NegativeEntropy(ActionSet::Simplex(2))};
  for (const Regularizer& reg : regs) {
    for (int s = 0; s < 300; ++s) {
      const Vec base = reg.domain().Sample(rng);
      const Vec g = {normal(rng), normal(rng)};
      const double eta = 0.3 + 0.01 * s;
      const Vec out = ProxStep(reg, base, g, eta);
      Vec lin = g;
      Axpy(eta, Sub(reg.Gradient(out), reg.Gradient(base)), lin);
      for (int k = 0; k < 10; ++k) {
        CHECK(Dot(lin, Sub(reg.domain().Sample(rng), out)) >= -1e-7);
      }
    }
  }
}

TEST_CASE("Dimension mismatches are rejected") {
  const auto quad = Regularizer::Quadratic(ActionSet::Unconstrained(2));
  CHECK_THROWS_AS(quad.Value(Vec{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(ProxStep(quad, Vec{0, 0}, Vec{1}, 1.0), DimensionError);
  CHECK_THROWS_AS(ActionSet::Box({0, 0}, {1}), DimensionError);
}

}  // namespace
}  // namespace adaptplay
