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

#include "adaptplay/geometry.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace adaptplay {
namespace {

void CheckDim(const ActionSet& set, ConstSpan x, const char* what) {
  if (static_cast<int>(x.size()) != set.dim()) {
    throw DimensionError(std::string(what) + ": expected dimension " +
                         std::to_string(set.dim()) + ", got " +
                         std::to_string(x.size()));
  }
}

void CheckFinite(ConstSpan y, const char* what) {
  if (!AllFinite(y)) {
    throw ParameterError(std::string(what) + ": non-finite dual vector");
  }
}

double LogSumExp(ConstSpan y) {
  const double m = *std::max_element(y.begin(), y.end());
  double s = 0.0;
  for (double v : y) s += std::exp(v - m);
  return m + std::log(s);
}

}  // namespace

// ---------------------------------------------------------------------------
// ActionSet

ActionSet ActionSet::Simplex(int dim) {
  if (dim < 1) throw DimensionError("Simplex: dim must be positive");
  return ActionSet(Kind::kSimplex, dim);
}

ActionSet ActionSet::Box(Vec lower, Vec upper) {
  if (lower.empty() || lower.size() != upper.size()) {
    throw DimensionError("Box: bounds must be non-empty and of equal size");
  }
  for (size_t k = 0; k < lower.size(); ++k) {
    if (!(lower[k] <= upper[k])) {
      throw ParameterError("Box: lower bound exceeds upper bound");
    }
  }
  ActionSet s(Kind::kBox, static_cast<int>(lower.size()));
  s.lower_ = std::move(lower);
  s.upper_ = std::move(upper);
  return s;
}

ActionSet ActionSet::Ball(Vec center, double radius) {
  if (center.empty()) throw DimensionError("Ball: empty center");
  if (!(radius > 0.0)) throw ParameterError("Ball: radius must be positive");
  ActionSet s(Kind::kBall, static_cast<int>(center.size()));
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

ActionSet ActionSet::Unconstrained(int dim) {
  if (dim < 1) throw DimensionError("Unconstrained: dim must be positive");
  return ActionSet(Kind::kUnconstrained, dim);
}

ActionSet ActionSet::Budget(int dim, double budget) {
  if (dim < 1) throw DimensionError("Budget: dim must be positive");
  if (!(budget > 0.0)) throw ParameterError("Budget: budget must be positive");
  ActionSet s(Kind::kBudget, dim);
  s.radius_ = budget;
  return s;
}

bool ActionSet::Contains(ConstSpan x, double tol) const {
  if (static_cast<int>(x.size()) != dim_ || !AllFinite(x)) return false;
  switch (kind_) {
    case Kind::kSimplex: {
      double sum = 0.0;
      for (double v : x) {
        if (v < -1e-12) return false;
        sum += v;
      }
      return std::abs(sum - 1.0) <= tol;
    }
    case Kind::kBox:
      for (int k = 0; k < dim_; ++k) {
        if (x[k] < lower_[k] - tol || x[k] > upper_[k] + tol) return false;
      }
      return true;
    case Kind::kBall:
      return Norm2(Sub(x, center_)) <= radius_ + tol;
    case Kind::kUnconstrained:
      return true;
    case Kind::kBudget: {
      double sum = 0.0;
      for (double v : x) {
        if (v < -1e-12) return false;
        sum += v;
      }
      return sum <= radius_ + tol;
    }
  }
  return false;
}

Vec ActionSet::Project(ConstSpan y) const {
  CheckDim(*this, y, "Project");
  switch (kind_) {
    case Kind::kSimplex:
      return SimplexProjection(y, 1.0);
    case Kind::kBox: {
      Vec out(y.begin(), y.end());
      for (int k = 0; k < dim_; ++k) out[k] = std::clamp(out[k], lower_[k], upper_[k]);
      return out;
    }
    case Kind::kBall: {
      Vec d = Sub(y, center_);
      const double n = Norm2(d);
      if (n <= radius_) return Vec(y.begin(), y.end());
      Vec out = center_;
      Axpy(radius_ / n, d, out);
      return out;
    }
    case Kind::kUnconstrained:
      return Vec(y.begin(), y.end());
    case Kind::kBudget: {
      // Fast path: the positive part already satisfies the budget.
      Vec pos(y.begin(), y.end());
      double sum = 0.0;
      for (double& v : pos) {
        v = std::max(v, 0.0);
        sum += v;
      }
      if (sum <= radius_) return pos;
      Vec ext(y.begin(), y.end());
      ext.push_back(0.0);
      Vec proj = SimplexProjection(ext, radius_);
      proj.pop_back();
      return proj;
    }
  }
  return {};
}

Vec ActionSet::LinearMinimizer(ConstSpan c) const {
  CheckDim(*this, c, "LinearMinimizer");
  switch (kind_) {
    case Kind::kSimplex: {
      Vec out(dim_, 0.0);
      out[std::min_element(c.begin(), c.end()) - c.begin()] = 1.0;
      return out;
    }
    case Kind::kBox: {
      Vec out(dim_);
      for (int k = 0; k < dim_; ++k) out[k] = c[k] > 0.0 ? lower_[k] : upper_[k];
      return out;
    }
    case Kind::kBall: {
      const double n = Norm2(c);
      Vec out = center_;
      if (n > 0.0) Axpy(-radius_ / n, c, out);
      return out;
    }
    case Kind::kUnconstrained:
      throw ConfigError("LinearMinimizer: unbounded action set");
    case Kind::kBudget: {
      Vec out(dim_, 0.0);
      const auto it = std::min_element(c.begin(), c.end());
      if (*it < 0.0) out[it - c.begin()] = radius_;
      return out;
    }
  }
  return {};
}

Vec ActionSet::Sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::exponential_distribution<double> expo(1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  switch (kind_) {
    case Kind::kSimplex: {
      Vec out(dim_);
      double sum = 0.0;
      for (double& v : out) sum += (v = expo(rng));
      for (double& v : out) v /= sum;
      return out;
    }
    case Kind::kBox: {
      Vec out(dim_);
      for (int k = 0; k < dim_; ++k) out[k] = lower_[k] + (upper_[k] - lower_[k]) * unit(rng);
      return out;
    }
    case Kind::kBall: {
      Vec dir(dim_);
      for (double& v : dir) v = normal(rng);
      const double n = Norm2(dir);
      const double r = radius_ * std::pow(unit(rng), 1.0 / dim_);
      Vec out = center_;
      Axpy(n > 0.0 ? r / n : 0.0, dir, out);
      return out;
    }
    case Kind::kUnconstrained: {
      Vec out(dim_);
      for (double& v : out) v = 2.0 * unit(rng) - 1.0;
      return out;
    }
    case Kind::kBudget: {
      Vec out(dim_ + 1);
      double sum = 0.0;
      for (double& v : out) sum += (v = expo(rng));
      for (double& v : out) v *= radius_ / sum;
      out.pop_back();
      return out;
    }
  }
  return {};
}

Vec ActionSet::Center() const {
  switch (kind_) {
    case Kind::kSimplex:
      return Vec(dim_, 1.0 / dim_);
    case Kind::kBox: {
      Vec out(dim_);
      for (int k = 0; k < dim_; ++k) out[k] = 0.5 * (lower_[k] + upper_[k]);
      return out;
    }
    case Kind::kBall:
      return center_;
    case Kind::kUnconstrained:
      return Vec(dim_, 0.0);
    case Kind::kBudget:
      return Vec(dim_, radius_ / (dim_ + 1));
  }
  return {};
}

std::string ActionSet::Describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::kSimplex:
      os << "Simplex(" << dim_ << ")";
      break;
    case Kind::kBox:
      os << "Box(" << dim_ << ")";
      break;
    case Kind::kBall:
      os << "Ball(" << dim_ << ", r=" << radius_ << ")";
      break;
    case Kind::kUnconstrained:
      os << "Unconstrained(" << dim_ << ")";
      break;
    case Kind::kBudget:
      os << "Budget(" << dim_ << ", b=" << radius_ << ")";
      break;
  }
  return os.str();
}

Vec SimplexProjection(ConstSpan v, double radius) {
  if (v.empty()) throw DimensionError("SimplexProjection: empty vector");
  CheckFinite(v, "SimplexProjection");
  Vec sorted(v.begin(), v.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumsum = 0.0;
  double theta = 0.0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    cumsum += sorted[k];
    const double t = (cumsum - radius) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  Vec out(v.size());
  for (size_t k = 0; k < v.size(); ++k) out[k] = std::max(v[k] - theta, 0.0);
  return out;
}

// ---------------------------------------------------------------------------
// Regularizer

Regularizer Regularizer::Quadratic(ActionSet domain) {
  return Regularizer(Kind::kQuadratic, std::move(domain));
}

Regularizer Regularizer::NegativeEntropy(ActionSet domain) {
  if (domain.kind() != ActionSet::Kind::kSimplex) {
    throw ConfigError("NegativeEntropy requires a simplex domain, got " +
                      domain.Describe());
  }
  return Regularizer(Kind::kNegativeEntropy, std::move(domain));
}

double Regularizer::Value(ConstSpan x) const {
  CheckDim(domain_, x, "Regularizer::Value");
  if (kind_ == Kind::kQuadratic) return 0.5 * Dot(x, x);
  double s = 0.0;
  for (double v : x) {
    if (v > 0.0) s += v * std::log(v);
  }
  return s;
}

Vec Regularizer::Gradient(ConstSpan x) const {
  CheckDim(domain_, x, "Regularizer::Gradient");
  Vec out(x.begin(), x.end());
  if (kind_ == Kind::kNegativeEntropy) {
    for (double& v : out) v = std::log(std::max(v, kEntropyFloor)) + 1.0;
  }
  return out;
}

double Regularizer::MinValue() const { return Value(Minimizer()); }

Vec Regularizer::Minimizer() const {
  if (kind_ == Kind::kNegativeEntropy) return Vec(dim(), 1.0 / dim());
  return domain_.Project(Vec(dim(), 0.0));
}

double Regularizer::PrimalNorm(ConstSpan x) const {
  return kind_ == Kind::kQuadratic ? Norm2(x) : Norm1(x);
}

double Regularizer::DualNorm(ConstSpan y) const {
  return kind_ == Kind::kQuadratic ? Norm2(y) : NormInf(y);
}

std::string Regularizer::Describe() const {
  return std::string(kind_ == Kind::kQuadratic ? "Quadratic" : "NegativeEntropy") +
         " on " + domain_.Describe();
}

// ---------------------------------------------------------------------------
// Free functions

double Bregman(const Regularizer& reg, ConstSpan target, ConstSpan base) {
  CheckDim(reg.domain(), target, "Bregman target");
  CheckDim(reg.domain(), base, "Bregman base");
  if (reg.kind() == Regularizer::Kind::kQuadratic) {
    const Vec d = Sub(target, base);
    return 0.5 * Dot(d, d);
  }
  // sum p log(p/q) + sum q - sum p, written termwise to avoid cancellation
  // between h(target) and h(base).
  double s = 0.0;
  for (size_t k = 0; k < target.size(); ++k) {
    const double p = target[k];
    const double q = base[k];
    if (p > 0.0) {
      if (q <= 0.0) {
        throw BoundaryError("Bregman: entropy base on the simplex boundary");
      }
      s += p * std::log(p / q);
    }
    s += q - p;
  }
  return std::max(s, 0.0);
}

double FenchelConjugate(const Regularizer& reg, ConstSpan y) {
  CheckDim(reg.domain(), y, "FenchelConjugate");
  CheckFinite(y, "FenchelConjugate");
  if (reg.kind() == Regularizer::Kind::kNegativeEntropy) return LogSumExp(y);
  const Vec x = reg.domain().Project(y);
  return Dot(y, x) - 0.5 * Dot(x, x);
}

double FenchelCoupling(const Regularizer& reg, ConstSpan target, ConstSpan y) {
  CheckDim(reg.domain(), target, "FenchelCoupling target");
  // Written as h(p) - h(Q(y)) - <y, p - Q(y)>, which is the same quantity
  // with less cancellation than h(p) + h*(y) - <y, p>.
  const Vec x = MirrorMap(reg, y);
  if (reg.kind() == Regularizer::Kind::kQuadratic) {
    // = |p - x|^2/2 + <x - y, p - x>
    const Vec d = Sub(target, x);
    return 0.5 * Dot(d, d) + Dot(Sub(x, y), d);
  }
  // Entropy: sum p (log p - (y - lse)) + lse (1 - sum p), i.e. KL(p, Q(y))
  // with log Q(y) kept in the log domain.
  const double lse = LogSumExp(y);
  double s = 0.0;
  double mass = 0.0;
  for (size_t k = 0; k < target.size(); ++k) {
    const double p = target[k];
    mass += p;
    if (p > 0.0) s += p * (std::log(p) - (y[k] - lse));
  }
  return s + lse * (1.0 - mass);
}

Vec Softmax(ConstSpan y) {
  const double m = *std::max_element(y.begin(), y.end());
  Vec out(y.size());
  double sum = 0.0;
  for (size_t k = 0; k < y.size(); ++k) sum += (out[k] = std::exp(y[k] - m));
  for (double& v : out) v /= sum;
  return out;
}

Vec MirrorMap(const Regularizer& reg, ConstSpan y) {
  CheckDim(reg.domain(), y, "MirrorMap");
  CheckFinite(y, "MirrorMap");
  if (reg.kind() == Regularizer::Kind::kNegativeEntropy) return Softmax(y);
  return reg.domain().Project(y);
}

Vec ProxStep(const Regularizer& reg, ConstSpan base, ConstSpan g, double eta) {
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw ParameterError("ProxStep: eta must be positive and finite");
  }
  CheckDim(reg.domain(), base, "ProxStep base");
  CheckDim(reg.domain(), g, "ProxStep g");
  Vec y = reg.Gradient(base);
  Axpy(-1.0 / eta, g, y);
  return MirrorMap(reg, y);
}

}  // namespace adaptplay
