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

#include "adaptplay/errors.h"
#include "adaptplay/games.h"
#include "adaptplay/kernels.h"
#include "adaptplay/learners.h"
#include "doctest.h"

namespace adaptplay {
namespace {

std::vector<Learner> KellyLearners(const GameDefinition& game) {
  std::vector<Learner> ls;
  for (int i = 0; i < game.players(); ++i) {
    const Algorithm a = i % 2 ? Algorithm::kDSOptMD : Algorithm::kOptDA;
    ls.emplace_back(a, Regularizer::Quadratic(game.action_sets[i]), RateState::Adaptive(1.0),
                    game.action_sets[i].Center());
  }
  return ls;
}

TEST_CASE("Serial and OpenMP kernels agree bit for bit") {
  const GameDefinition game = BuildKelly(6, 12, 42);
  std::vector<Learner> serial = KellyLearners(game), parallel = KellyLearners(game);
  RegretLedger ls(game), lp(game);
  std::vector<std::vector<Vec>> probes(game.players());
  for (int i = 0; i < game.players(); ++i) probes[i] = {game.action_sets[i].Center()};
  RoundBuffers rs, rp;
  for (long t = 1; t <= 300; ++t) {
    PlayRound(serial, game, ExecPolicy::kSerial, true, t, rs);
    PlayRound(parallel, game, ExecPolicy::kOpenMP, true, t, rp);
    REQUIRE(rs.played == rp.played);
    REQUIRE(rs.feedback == rp.feedback);
    const Vec a = TemplateResiduals(serial, rs, probes, ExecPolicy::kSerial);
    const Vec b = TemplateResiduals(parallel, rp, probes, ExecPolicy::kOpenMP);
    REQUIRE(a == b);
    ls.Record(rs.played, rs.feedback);
    lp.Record(rp.played, rp.feedback);
  }
  const auto ra = RegretCheckpoint(ls, ExecPolicy::kSerial);
  const auto rb = RegretCheckpoint(lp, ExecPolicy::kOpenMP);
  REQUIRE(ra.size() == rb.size());
  for (size_t i = 0; i < ra.size(); ++i) {
    CHECK(ra[i].regret == rb[i].regret);
    CHECK(ra[i].best_response == rb[i].best_response);
  }
  CHECK(KernelThreads() >= 1);
}

TEST_CASE("Players without an energy inequality report +inf") {
  const GameDefinition game = BuildBilinear(-4, 8);
  std::vector<Learner> ls;
  ls.emplace_back(Algorithm::kOptMD, Regularizer::Quadratic(game.action_sets[0]),
                  RateState::Adaptive(1.0));
  ls.emplace_back(Algorithm::kOptDA, Regularizer::Quadratic(game.action_sets[1]),
                  RateState::Adaptive(1.0));
  RoundBuffers round;
  PlayRound(ls, game, ExecPolicy::kSerial, true, 1, round);
  const Vec r = TemplateResiduals(ls, round, {{{0.0}}, {{0.0}}}, ExecPolicy::kSerial);
  CHECK(std::isinf(r[0]));
  CHECK(r[1] >= -1e-7);
}

TEST_CASE("Non-finite feedback aborts the round with its step") {
  GameDefinition game = BuildBilinear(-4, 8);
  const auto grad = game.grad;
  game.grad = [grad](int i, const JointAction& x) {
    Vec g = grad(i, x);
    if (i == 1) g[0] = std::numeric_limits<double>::quiet_NaN();
    return g;
  };
  std::vector<Learner> ls;
  for (int i = 0; i < 2; ++i) {
    ls.emplace_back(Algorithm::kOptDA, Regularizer::Quadratic(game.action_sets[i]),
                    RateState::Adaptive(1.0));
  }
  RoundBuffers round;
  for (ExecPolicy p : {ExecPolicy::kSerial, ExecPolicy::kOpenMP}) {
    try {
      PlayRound(ls, game, p, false, 17, round);
      FAIL("expected NumericalAbort");
    } catch (const NumericalAbort& e) {
      CHECK(e.step() == 17);
    }
  }
}

}  // namespace
}  // namespace adaptplay
