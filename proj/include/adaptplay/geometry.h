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

#ifndef ADAPTPLAY_GEOMETRY_H_
#define ADAPTPLAY_GEOMETRY_H_

#include <random>
#include <string>

#include "adaptplay/vec.h"

namespace adaptplay {

// Entropy coordinates are floored at this value before taking logarithms.
inline constexpr double kEntropyFloor = 1e-300;

// Membership tolerance used for every projection/mirror output.
inline constexpr double kMembershipTol = 1e-9;

// Closed convex action set of one player.
//
// Budget(dim, b) is {x >= 0, sum x <= b}; it is the per-bidder set of the
// Kelly auction and is projected through a simplex with one slack coordinate.
class ActionSet {
 public:
  enum class Kind { kSimplex, kBox, kBall, kUnconstrained, kBudget };

  static ActionSet Simplex(int dim);
  static ActionSet Box(Vec lower, Vec upper);
  static ActionSet Ball(Vec center, double radius);
  static ActionSet Unconstrained(int dim);
  static ActionSet Budget(int dim, double budget);

  Kind kind() const { return kind_; }
  int dim() const { return dim_; }
  const Vec& lower() const { return lower_; }
  const Vec& upper() const { return upper_; }
  const Vec& center() const { return center_; }
  double radius() const { return radius_; }
  double budget() const { return radius_; }
  bool bounded() const { return kind_ != Kind::kUnconstrained; }

  bool Contains(ConstSpan x, double tol = kMembershipTol) const;

  // Euclidean projection onto the set (exact, closed form or sort-based).
  Vec Project(ConstSpan y) const;

  // argmin_{x in set} <c, x>. Throws ConfigError on unbounded sets.
  Vec LinearMinimizer(ConstSpan c) const;

  // A feasible point drawn from a distribution with full support on the set
  // (Dirichlet(1) on simplices, uniform on boxes and balls). Unconstrained
  // sets sample the cube [-1, 1]^dim.
  Vec Sample(std::mt19937_64& rng) const;

  // Canonical "middle" of the set: barycenter of the simplex, box midpoint,
  // ball center, origin, or budget/(dim+1) on each coordinate.
  Vec Center() const;

  std::string Describe() const;

 private:
  ActionSet(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  Vec lower_, upper_, center_;
  double radius_ = 0.0;
};

// Euclidean projection onto {x >= 0, sum x = radius} by sort-and-threshold.
Vec SimplexProjection(ConstSpan v, double radius = 1.0);

// Strongly convex potential on an action set.
//
// Quadratic: h(x) = |x|_2^2 / 2, paired with the l2 norm (self-dual).
// NegativeEntropy: h(x) = sum x_k log x_k on a simplex, paired with the l1
// norm and its dual l-infinity norm.
class Regularizer {
 public:
  enum class Kind { kQuadratic, kNegativeEntropy };

  static Regularizer Quadratic(ActionSet domain);
  // Throws ConfigError unless `domain` is a simplex.
  static Regularizer NegativeEntropy(ActionSet domain);

  Kind kind() const { return kind_; }
  const ActionSet& domain() const { return domain_; }
  int dim() const { return domain_.dim(); }

  double Value(ConstSpan x) const;
  // Continuous selection of the subdifferential. Entropy coordinates are
  // floored at kEntropyFloor.
  Vec Gradient(ConstSpan x) const;
  // min over the domain of h, and the point attaining it.
  double MinValue() const;
  Vec Minimizer() const;

  double PrimalNorm(ConstSpan x) const;
  double DualNorm(ConstSpan y) const;

  std::string Describe() const;

 private:
  Regularizer(Kind kind, ActionSet domain)
      : kind_(kind), domain_(std::move(domain)) {}

  Kind kind_;
  ActionSet domain_;
};

// D(target, base) = h(target) - h(base) - <grad h(base), target - base>.
// Throws BoundaryError when an entropy base has a zero coordinate on which the
// target puts mass.
double Bregman(const Regularizer& reg, ConstSpan target, ConstSpan base);

// h*(y) = max_x <y, x> - h(x), in closed form.
double FenchelConjugate(const Regularizer& reg, ConstSpan y);

// F(p, y) = h(p) + h*(y) - <y, p>.
double FenchelCoupling(const Regularizer& reg, ConstSpan target, ConstSpan y);

// Q(y) = argmax_x <y, x> - h(x).
Vec MirrorMap(const Regularizer& reg, ConstSpan y);

// argmin_x <g, x> + eta * D(x, base) = Q(grad h(base) - g / eta).
Vec ProxStep(const Regularizer& reg, ConstSpan base, ConstSpan g, double eta);

// Numerically stable softmax.
Vec Softmax(ConstSpan y);

}  // namespace adaptplay

#endif  // ADAPTPLAY_GEOMETRY_H_
