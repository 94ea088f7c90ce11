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

#ifndef ADAPTPLAY_KERNELS_H_
#define ADAPTPLAY_KERNELS_H_

#include <vector>

#include "adaptplay/games.h"
#include "adaptplay/learners.h"
#include "adaptplay/metrics.h"

namespace adaptplay {

// Per-round work is independent across players, so each kernel below comes in
// a serial reference form and an OpenMP form that splits the player loop.
// Neither form reduces across players, so both produce bit-identical output.
enum class ExecPolicy { kSerial, kOpenMP };

struct RoundBuffers {
  JointAction played;
  std::vector<Vec> feedback;
  std::vector<StepSnapshot> snapshots;  // filled when requested
};

// Commits every learner, evaluates V_i at the joint played profile and
// ingests it. Throws NumericalAbort when an oracle returns a non-finite value.
void PlayRound(std::vector<Learner>& learners, const GameDefinition& game,
               ExecPolicy policy, bool keep_snapshots, long step, RoundBuffers& out);

// For every player with an energy inequality, the minimum residual over its
// probe points for the round just played (+inf for players without one).
Vec TemplateResiduals(const std::vector<Learner>& learners, const RoundBuffers& round,
                      const std::vector<std::vector<Vec>>& probes, ExecPolicy policy);

// Individual regret of every player against its full action set.
std::vector<RegretValue> RegretCheckpoint(const RegretLedger& ledger, ExecPolicy policy);

// Number of threads the OpenMP kernels would use (1 without OpenMP).
int KernelThreads();

}  // namespace adaptplay

#endif  // ADAPTPLAY_KERNELS_H_
