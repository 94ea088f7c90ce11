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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adaptplay/errors.h"
#include "adaptplay/harness.h"
#include "adaptplay/metrics.h"
#include "doctest.h"

namespace adaptplay {
namespace {

namespace fs = std::filesystem;

constexpr char kKellyConfig[] = R"(schema = 1

[game]
kind = kelly
resources = 3
bidders = 4
seed = 5

[run]
horizon = 300
stride = 10

[players]
algorithm = optda
anchor = center

[player.2]
algorithm = ds-optmd
tau = 2
)";

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path ScratchDir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("adaptplay_test_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST_CASE("Config parsing") {
  const ExperimentConfig c = ParseConfig(kKellyConfig);
  CHECK(c.game.kind == "kelly");
  CHECK(c.game.bidders == 4);
  CHECK(c.horizon == 300);
  CHECK(c.stride == 10);
  REQUIRE(c.players.size() == 4);
  CHECK(c.players[0].algorithm == Algorithm::kOptDA);
  CHECK(c.players[1].algorithm == Algorithm::kDSOptMD);
  CHECK(c.players[1].tau == 2.0);
  CHECK(c.players[3].anchor == "center");
  CHECK(c.players[3].regularizer == "euclidean");

  const ExperimentConfig o =
      ParseConfig(kKellyConfig, {"run.horizon=50", "player.4.eta=0.5", "game.seed=9"});
  CHECK(o.horizon == 50);
  CHECK(o.game.seed == 9);
  CHECK(o.players[3].fixed_eta == 0.5);
  CHECK_FALSE(o.players[2].fixed_eta.has_value());
}

TEST_CASE("Config errors") {
  const std::string base = "schema = 1\n[game]\nkind = bilinear\n";
  CHECK_NOTHROW(ParseConfig(base));
  CHECK_THROWS_AS(ParseConfig("schema = 2\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "colour = red\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[sweep]\nn = 1\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[run]\nhorizon = 0\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[run]\nstride = many\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[player.3]\ntau = 1\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[players]\nregularizer = tsallis\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base + "[players]\nalgorithm = sgd\n"), ConfigError);
  CHECK_THROWS_AS(ParseConfig(base, {"run.horizon"}), ConfigError);
  CHECK_THROWS_AS(ParseConfig("[game]\nkind = nonsense\n"), ConfigError);
  CHECK_THROWS_AS(LoadConfig("/nonexistent/config.ini"), ConfigError);

  ExperimentConfig bad = ParseConfig(base);
  bad.players[0].anchor = "1 2";
  CHECK_THROWS_AS(RunExperiment(bad), ConfigError);
  bad = ParseConfig(base);
  bad.players.pop_back();
  CHECK_THROWS_AS(RunExperiment(bad), ConfigError);
}

TEST_CASE("Config formatting round-trips") {
  ExperimentConfig c = ParseConfig(kKellyConfig, {"player.1.eta=0.25", "run.regret=false"});
  const std::string text = FormatConfig(c);
  const ExperimentConfig back = ParseConfig(text);
  CHECK(FormatConfig(back) == text);
  CHECK(back.players[0].fixed_eta == 0.25);
  CHECK_FALSE(back.regret);

  ExperimentConfig m;
  m.game.kind = "matrix";
  m.game.matrix = {{0, 1}, {-1, 0.5}};
  m.players.assign(2, LearnerSpec{});
  const ExperimentConfig mb = ParseConfig(FormatConfig(m));
  CHECK(mb.game.matrix == m.game.matrix);
}

TEST_CASE("A single round logs one record") {
  const ExperimentConfig c = ParseConfig(kKellyConfig, {"run.horizon=1"});
  const RunResult r = RunExperiment(c);
  REQUIRE(r.records.size() == 1);
  CHECK(r.records[0].t == 1);
  const GameDefinition game = BuildGame(c.game);
  RegretLedger ledger(game);
  std::vector<Vec> fb;
  for (int i = 0; i < game.players(); ++i) fb.push_back(game.Grad(i, r.records[0].played));
  ledger.Record(r.records[0].played, fb);
  for (int i = 0; i < game.players(); ++i) {
    const Vec& played = r.records[0].played[i];
    CHECK(ledger.IndividualRegret(i, ComparatorPoint{played}).regret == 0.0);
    CHECK(r.records[0].regret[i] >= -1e-9);
  }
}

TEST_CASE("Runs are deterministic and policy independent") {
  ExperimentConfig c = ParseConfig(kKellyConfig);
  const RunResult a = RunExperiment(c);
  const RunResult b = RunExperiment(c);
  c.policy = ExecPolicy::kOpenMP;
  const RunResult p = RunExperiment(c);
  for (const RunResult* r : {&b, &p}) {
    CHECK(TrajectoryCsv(a) == TrajectoryCsv(*r));
    CHECK(RegretCsv(a) == RegretCsv(*r));
    CHECK(RatesCsv(a) == RatesCsv(*r));
    CHECK(ResidualsCsv(a) == ResidualsCsv(*r));
  }
}

TEST_CASE("Logging stride does not change the trajectory") {
  const ExperimentConfig fine = ParseConfig(kKellyConfig, {"run.stride=1", "run.horizon=120"});
  const ExperimentConfig coarse = ParseConfig(kKellyConfig, {"run.stride=7", "run.horizon=120"});
  const RunResult f = RunExperiment(fine), c = RunExperiment(coarse);
  CHECK(f.records.size() == 120);
  // t = 1, multiples of 7, and the last round.
  CHECK(c.records.size() == 1 + 17 + 1);
  for (const RunRecord& rc : c.records) {
    const RunRecord& rf = f.records[rc.t - 1];
    REQUIRE(rf.t == rc.t);
    CHECK(rf.played == rc.played);
    CHECK(rf.eta == rc.eta);
    // Regret comes from a warm-started oracle, so it agrees up to the certificates.
    const double tol = rf.oracle_gap + rc.oracle_gap + 1e-9;
    for (size_t i = 0; i < rf.regret.size(); ++i) {
      CHECK(std::abs(rf.regret[i] - rc.regret[i]) <= tol);
    }
  }
  CHECK(f.delta == c.delta);
  CHECK(f.step_diff == c.step_diff);
}

TEST_CASE("Record contents") {
  const RunResult r = RunExperiment(ParseConfig(kKellyConfig));
  CHECK(r.records.front().t == 1);
  CHECK(r.records.back().t == 300);
  CHECK(r.records.size() == 1 + 30);
  CHECK(r.infeasible_commits == 0);
  for (const RunRecord& rec : r.records) {
    double sum = 0.0;
    for (double v : rec.regret) sum += v;
    CHECK(std::abs(sum - rec.social_regret) <= 1e-12);
    CHECK_FALSE(rec.distance_to_target.has_value());
    for (double e : rec.eta) CHECK(e > 0.0);
  }
  for (double m : r.min_residual) CHECK(m >= -1e-7);
  REQUIRE(r.delta.size() == 4);
  CHECK(r.delta[0].size() == 300);
  CHECK(r.step_diff[3].size() == 300);
}

TEST_CASE("CSV layout") {
  ExperimentConfig c = ParseConfig("schema = 1\n[game]\nkind = bilinear\n[run]\nhorizon = 3\n");
  const RunResult r = RunExperiment(c);
  std::istringstream traj(TrajectoryCsv(r));
  std::string header;
  std::getline(traj, header);
  CHECK(header == "t,x1_1,x2_1,loss1,loss2,stepdiff1,stepdiff2,dist_target");
  std::istringstream reg(RegretCsv(r));
  std::getline(reg, header);
  CHECK(header == "t,reg1,reg2,social,oracle_gap");
  std::istringstream rates(RatesCsv(r));
  std::getline(rates, header);
  CHECK(header == "t,eta1,eta2,delta1,delta2");
  std::istringstream res(ResidualsCsv(r));
  std::getline(res, header);
  CHECK(header == "t,resid1,resid2");
  CHECK(FormatDouble(0.1) == "0.1");
  CHECK(FormatDouble(1e-300) == "1e-300");
  CHECK(FormatDouble(std::nan("")) == "nan");
  CHECK(std::stod(FormatDouble(1.0 / 3)) == 1.0 / 3);
}

TEST_CASE("Run output directory") {
  const fs::path dir = ScratchDir("run");
  const ExperimentConfig c = ParseConfig(kKellyConfig, {"run.horizon=20"});
  const RunResult r = RunExperiment(c);
  WriteRun(c, r, dir.string());
  for (const char* f : {"trajectory.csv", "regret.csv", "rates.csv", "residuals.csv", "meta.json"}) {
    CHECK(fs::exists(dir / f));
  }
  CHECK(ReadFile(dir / "regret.csv") == RegretCsv(r));
  const std::string meta = ReadFile(dir / "meta.json");
  CHECK(meta.find("\"csv_schema\": 1") != std::string::npos);
  CHECK(meta.find("\"max_iterations\": 500") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("PEG with a constant step keeps away from the equilibrium") {
  const RunResult r = RunExperiment(FigureConfig("peg-divergence"));
  const JointAction& last = r.records.back().played;
  CHECK(r.records.back().t == 10000);
  CHECK(std::hypot(last[0][0], last[1][0]) > 1.0);
  CHECK(std::hypot(r.learners[0].base()[0], r.learners[1].base()[0]) > 1.0);
  REQUIRE(r.records.back().distance_to_target.has_value());
  CHECK(*r.records.back().distance_to_target > 1.0);
}

TEST_CASE("Figure reproduction") {
  CHECK(FigureNames() == std::vector<std::string>{"peg-divergence", "zerosum", "kelly", "jordan"});
  const ExperimentConfig z = FigureConfig("zerosum");
  CHECK(z.horizon == 100000);
  CHECK(z.game.rows == 10);
  CHECK(z.game.seed == 42);
  CHECK(z.players[0].regularizer == "entropy");
  CHECK(z.players[1].regularizer == "euclidean");
  CHECK_THROWS_AS(FigureConfig("fig9"), ConfigError);

  const fs::path dir = ScratchDir("figure");
  ReproduceFigure("peg-divergence", dir.string());
  CHECK(fs::exists(dir / "trajectory.csv"));
  CHECK(fs::exists(dir / "regret.csv"));
  CHECK_FALSE(fs::exists(dir / "rates.csv"));
  fs::remove_all(dir);
}

TEST_CASE("Game listing") {
  std::vector<std::string> kinds;
  for (const GameInfo& g : ListGames()) kinds.push_back(g.kind);
  for (const char* k : {"bilinear", "zerosum", "matrix", "kelly", "jordan"}) {
    CHECK(std::find(kinds.begin(), kinds.end(), k) != kinds.end());
  }
}

}  // namespace
}  // namespace adaptplay
