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

#include "adaptplay/kernels.h"

#include <cmath>
#include <exception>
#include <limits>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace adaptplay {
namespace {

// Runs body(i) for i in [0, n), serially or across OpenMP threads. Exceptions
// thrown inside the parallel region are captured and the one from the lowest
// index is rethrown, so both policies report the same error.
template <typename Body>
void ForPlayers(int n, ExecPolicy policy, Body&& body) {
  if (policy == ExecPolicy::kSerial || n < 2) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
  int first_index = n;
  std::mutex mu;
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      if (i < first_index) {
        first_index = i;
        first = std::current_exception();
      }
    }
  }
  if (first) std::rethrow_exception(first);
}

}  // namespace

void PlayRound(std::vector<Learner>& learners, const GameDefinition& game, ExecPolicy policy,
               bool keep_snapshots, long step, RoundBuffers& out) {
  const int n = static_cast<int>(learners.size());
  out.played.resize(n);
  out.feedback.resize(n);
  out.snapshots.resize(keep_snapshots ? n : 0);

  ForPlayers(n, policy, [&](int i) {
    out.played[i] = learners[i].Commit();
    if (keep_snapshots) out.snapshots[i] = Snapshot(learners[i]);
  });
  ForPlayers(n, policy, [&](int i) {
    out.feedback[i] = game.grad(i, out.played);
    if (!AllFinite(out.feedback[i])) {
      throw NumericalAbort("non-finite feedback for player " + std::to_string(i), step);
    }
  });
  ForPlayers(n, policy, [&](int i) { learners[i].Ingest(out.feedback[i]); });
}

Vec TemplateResiduals(const std::vector<Learner>& learners, const RoundBuffers& round,
                      const std::vector<std::vector<Vec>>& probes, ExecPolicy policy) {
  const int n = static_cast<int>(learners.size());
  Vec out(n, std::numeric_limits<double>::infinity());
  ForPlayers(n, policy, [&](int i) {
    for (const Vec& p : probes[i]) {
      const auto terms =
          GatherTemplateTerms(round.snapshots[i], learners[i], round.feedback[i], p);
      if (!terms) return;
      out[i] = std::min(out[i], TemplateResidual(*terms));
    }
  });
  return out;
}

std::vector<RegretValue> RegretCheckpoint(const RegretLedger& ledger, ExecPolicy policy) {
  const int n = ledger.players();
  std::vector<RegretValue> out(n);
  ForPlayers(n, policy, [&](int i) { out[i] = ledger.IndividualRegret(i); });
  return out;
}

int KernelThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace adaptplay
