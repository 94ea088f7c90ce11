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

#ifndef ADAPTPLAY_VEC_H_
#define ADAPTPLAY_VEC_H_

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "adaptplay/errors.h"

namespace adaptplay {

using Vec = std::vector<double>;
using ConstSpan = std::span<const double>;

// Small dense-vector helpers. Action sets in this library are at most a few
// dozen dimensions, so plain loops over std::vector are all that is needed.

inline void CheckSameDim(ConstSpan a, ConstSpan b, const char* what) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(what) + ": dimension " +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

inline double Dot(ConstSpan a, ConstSpan b) {
  CheckSameDim(a, b, "Dot");
  double s = 0.0;
  for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

inline Vec Sub(ConstSpan a, ConstSpan b) {
  CheckSameDim(a, b, "Sub");
  Vec out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

inline Vec Add(ConstSpan a, ConstSpan b) {
  CheckSameDim(a, b, "Add");
  Vec out(a.size());
  for (size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

inline Vec Scale(ConstSpan a, double s) {
  Vec out(a.begin(), a.end());
  for (double& v : out) v *= s;
  return out;
}

// a += s * b
inline void Axpy(double s, ConstSpan b, std::span<double> a) {
  CheckSameDim(a, b, "Axpy");
  for (size_t k = 0; k < a.size(); ++k) a[k] += s * b[k];
}

inline double Norm2(ConstSpan a) { return std::sqrt(Dot(a, a)); }

inline double Norm1(ConstSpan a) {
  double s = 0.0;
  for (double v : a) s += std::abs(v);
  return s;
}

inline double NormInf(ConstSpan a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

inline bool AllFinite(ConstSpan a) {
  for (double v : a) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace adaptplay

#endif  // ADAPTPLAY_VEC_H_
