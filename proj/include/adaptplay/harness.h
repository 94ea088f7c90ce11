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

#ifndef ADAPTPLAY_HARNESS_H_
#define ADAPTPLAY_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adaptplay/games.h"
#include "adaptplay/kernels.h"
#include "adaptplay/learners.h"
#include "adaptplay/metrics.h"

namespace adaptplay {

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr int kCsvSchemaVersion = 1;

struct GameSpec {
  std::string kind = "zerosum";  // zerosum | matrix | kelly | jordan | bilinear
  int rows = 10;
  int cols = 10;
  std::uint64_t seed = 42;
  double range = 1.0;
  double lower = -4.0;
  double upper = 8.0;
  int resources = 6;
  int bidders = 20;
  std::vector<Vec> matrix;  // kind = matrix
};

struct LearnerSpec {
  Algorithm algorithm = Algorithm::kOptDA;
  std::string regularizer = "euclidean";  // euclidean | entropy
  double tau = 1.0;
  std::optional<double> fixed_eta;
  // "argmin" (default), "center", or explicit coordinates.
  std::string anchor = "argmin";
};

struct ExperimentConfig {
  int schema = kConfigSchemaVersion;
  GameSpec game;
  std::vector<LearnerSpec> players;
  long horizon = 1000;
  long stride = 1;
  std::uint64_t probe_seed = 7;
  bool template_check = true;
  bool regret = true;
  bool keep_trace = false;
  ExecPolicy policy = ExecPolicy::kSerial;
  LedgerOptions ledger;
};

// Parses the key-value config document (INI syntax: [game], [run],
// [players] defaults and [player.N] per-player overrides, N 1-based).
// `overrides` are "section.key=value" strings applied on top of the file.
ExperimentConfig ParseConfig(const std::string& text,
                             const std::vector<std::string>& overrides = {});
ExperimentConfig LoadConfig(const std::string& path,
                            const std::vector<std::string>& overrides = {});
// Inverse of ParseConfig for the fields it understands.
std::string FormatConfig(const ExperimentConfig& config);

GameDefinition BuildGame(const GameSpec& spec);
std::vector<Learner> BuildLearners(const ExperimentConfig& config, const GameDefinition& game);
// Template probe points per player: Nash component (if known), set center,
// and three seeded random feasible points.
std::vector<std::vector<Vec>> ProbePoints(const GameDefinition& game, std::uint64_t seed);

// One logged round.
struct RunRecord {
  long t = 0;
  JointAction played;
  Vec eta;     // eta_t used by the round's commit
  Vec delta;   // |g_t - g_{t-1}|_*^2
  Vec loss;    // l_i(x_t)
  Vec regret;  // individual regret vs the full action set
  double social_regret = 0.0;
  double oracle_gap = 0.0;  // max over players
  Vec step_diff;            // |x_{t+1/2} - x_{t-1/2}| in the player's primal norm
  std::optional<double> distance_to_target;  // l2 distance to the Nash point
  Vec residual;             // min template residual since the previous record
};

struct RunResult {
  std::string game_name;
  std::vector<RunRecord> records;
  // Full-resolution per-player series (index t-1).
  std::vector<Vec> delta;
  std::vector<Vec> step_diff;
  std::vector<Vec> eta;        // eta_t used at step t
  long infeasible_commits = 0;  // played points outside their action set
  Vec min_residual;            // over the whole run, per player
  std::vector<Learner> learners;  // final states
  std::vector<PlayerTrace> traces;  // when keep_trace
  JointAction last_played;
};

// Deterministic simulation: commit, feedback, ingest, bookkeeping; one record
// every `stride` rounds plus the first and last round.
RunResult RunExperiment(const ExperimentConfig& config);

// CSV output (see docs/formats.md).
std::string TrajectoryCsv(const RunResult& run);
std::string RegretCsv(const RunResult& run);
std::string RatesCsv(const RunResult& run);
std::string ResidualsCsv(const RunResult& run);
std::string MetadataJson(const ExperimentConfig& config, const RunResult& run);
// Writes trajectory/regret/rates/residuals CSVs and meta.json into `dir`.
void WriteRun(const ExperimentConfig& config, const RunResult& run, const std::string& dir);

// Shortest round-trip decimal.
std::string FormatDouble(double v);

// Figure configurations: peg-divergence, zerosum, kelly, jordan.
std::vector<std::string> FigureNames();
ExperimentConfig FigureConfig(const std::string& name);
// Runs the named figure and writes trajectory.csv and regret.csv to `dir`.
void ReproduceFigure(const std::string& name, const std::string& dir);

struct GameInfo {
  std::string kind;
  std::string description;
};
std::vector<GameInfo> ListGames();

}  // namespace adaptplay

#endif  // ADAPTPLAY_HARNESS_H_
