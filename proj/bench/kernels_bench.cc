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

// Serial reference vs OpenMP kernels on a Kelly auction.

#include <benchmark/benchmark.h>

#include "adaptplay/games.h"
#include "adaptplay/kernels.h"
#include "adaptplay/learners.h"

namespace adaptplay {
namespace {

struct Setup {
  GameDefinition game;
  std::vector<Learner> learners;
  std::vector<std::vector<Vec>> probes;
};

Setup MakeSetup(int bidders) {
  Setup s{BuildKelly(20, bidders, 42), {}, {}};
  for (int i = 0; i < bidders; ++i) {
    const ActionSet& set = s.game.action_sets[i];
    s.learners.emplace_back(Algorithm::kDSOptMD, Regularizer::Quadratic(set),
                            RateState::Adaptive(1.0), set.Center());
    s.probes.push_back({set.Center()});
  }
  return s;
}

void BM_PlayRound(benchmark::State& state, ExecPolicy policy) {
  Setup s = MakeSetup(static_cast<int>(state.range(0)));
  RoundBuffers round;
  long t = 0;
  for (auto _ : state) {
    PlayRound(s.learners, s.game, policy, true, ++t, round);
    benchmark::DoNotOptimize(TemplateResiduals(s.learners, round, s.probes, policy));
  }
  state.counters["threads"] = policy == ExecPolicy::kOpenMP ? KernelThreads() : 1;
}

void BM_RegretCheckpoint(benchmark::State& state, ExecPolicy policy) {
  Setup s = MakeSetup(static_cast<int>(state.range(0)));
  RegretLedger ledger(s.game);
  RoundBuffers round;
  for (long t = 1; t <= 200; ++t) {
    PlayRound(s.learners, s.game, ExecPolicy::kSerial, false, t, round);
    ledger.Record(round.played, round.feedback);
  }
  for (auto _ : state) benchmark::DoNotOptimize(RegretCheckpoint(ledger, policy));
}

BENCHMARK_CAPTURE(BM_PlayRound, serial, ExecPolicy::kSerial)->Arg(20)->Arg(200);
BENCHMARK_CAPTURE(BM_PlayRound, openmp, ExecPolicy::kOpenMP)->Arg(20)->Arg(200);
BENCHMARK_CAPTURE(BM_RegretCheckpoint, serial, ExecPolicy::kSerial)->Arg(20);
BENCHMARK_CAPTURE(BM_RegretCheckpoint, openmp, ExecPolicy::kOpenMP)->Arg(20);

}  // namespace
}  // namespace adaptplay

BENCHMARK_MAIN();
