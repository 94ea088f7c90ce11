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

#include "adaptplay/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "adaptplay/harness.h"
#include "json.hpp"

namespace adaptplay {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// Tail maximum of |series|: max over indices [from, end).
double TailMax(const Vec& series, size_t from) {
  double out = 0.0;
  for (size_t t = from; t < series.size(); ++t) out = std::max(out, std::abs(series[t]));
  return out;
}

// eta_{T+1} - eta_{from+1} from the increment series and tau.
double RateChange(const Vec& delta, double tau, size_t from) {
  double head = tau;
  for (size_t t = 0; t < from; ++t) head += delta[t];
  double all = head;
  for (size_t t = from; t < delta.size(); ++t) all += delta[t];
  return std::sqrt(all) - std::sqrt(head);
}

const RunRecord& RecordAt(const RunResult& run, long t) {
  for (const RunRecord& r : run.records) {
    if (r.t == t) return r;
  }
  throw ConfigError("no record logged at step " + std::to_string(t));
}

// ---------------------------------------------------------------------------
// Geometry sample families

struct Family {
  std::string label;
  Regularizer reg;
};

std::vector<Family> GeometryFamilies() {
  return {
      {"quadratic/unconstrained", Regularizer::Quadratic(ActionSet::Unconstrained(4))},
      {"quadratic/box", Regularizer::Quadratic(ActionSet::Box({-1, -1, 0, 2}, {2, 1, 3, 5}))},
      {"quadratic/ball", Regularizer::Quadratic(ActionSet::Ball({0.5, -1, 0}, 2.0))},
      {"quadratic/simplex", Regularizer::Quadratic(ActionSet::Simplex(5))},
      {"quadratic/budget", Regularizer::Quadratic(ActionSet::Budget(4, 3.0))},
      {"entropy/simplex", Regularizer::NegativeEntropy(ActionSet::Simplex(5))},
  };
}

Vec RandomDual(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 2.0);
  Vec y(dim);
  for (double& v : y) v = normal(rng);
  return y;
}

// ---------------------------------------------------------------------------
// Cached simulations

struct StreamRun {
  std::string label;
  Vec regret_over_sqrt;  // Reg_t / sqrt(t), t = 1..T
  double regret = 0.0;
  double bound = 0.0;
  double eta_over_sqrt = 0.0;
  Vec delta;
  double tau = 1.0;
};

struct FrozenRun {
  std::string label;
  double distance = 0.0;
  Vec delta;
  double tau = 1.0;
};

struct PegRun {
  double min_base_norm = kInf;  // over t >= 1000
  double base_average_norm = 0.0;
  double played_average_norm = 0.0;
  double contrast_last = 0.0;
  Vec delta;
};

struct DeltaSeries {
  std::string label;
  double tau;
  Vec delta;
};

class Context {
 public:
  explicit Context(const VerifyOptions& options) : options_(options) {}

  const RunResult& Zerosum() { return Cached("zerosum", [] {
      ExperimentConfig c = FigureConfig("zerosum");
      c.stride = 100;
      return c;
    }); }
  const RunResult& Kelly() { return Cached("kelly", [] {
      ExperimentConfig c = FigureConfig("kelly");
      c.stride = 1000;
      return c;
    }); }
  const RunResult& Jordan() { return Cached("jordan", [] {
      ExperimentConfig c = FigureConfig("jordan");
      c.stride = 1000;
      return c;
    }); }

  const std::vector<const RunResult*>& TemplateRuns();
  const std::vector<StreamRun>& Streams();
  const std::vector<FrozenRun>& Frozen();
  const PegRun& Peg();
  double EquivalenceGap();

  // Every delta sequence produced by a simulation so far.
  std::vector<DeltaSeries> AllDeltas();
  // Forces every simulation the suites use.
  void RunEverything();

  const VerifyOptions& options() const { return options_; }
  const std::map<std::string, ExperimentConfig>& configs() const { return configs_; }
  const std::map<std::string, std::unique_ptr<RunResult>>& runs() const { return runs_; }

 private:
  const RunResult& Cached(const std::string& key, const std::function<ExperimentConfig()>& make) {
    auto it = runs_.find(key);
    if (it != runs_.end()) return *it->second;
    ExperimentConfig c = make();
    c.policy = options_.policy;
    configs_[key] = c;
    auto run = std::make_unique<RunResult>(RunExperiment(c));
    return *runs_.emplace(key, std::move(run)).first->second;
  }

  VerifyOptions options_;
  std::map<std::string, ExperimentConfig> configs_;
  std::map<std::string, std::unique_ptr<RunResult>> runs_;
  std::vector<const RunResult*> template_runs_;
  std::optional<std::vector<StreamRun>> streams_;
  std::optional<std::vector<FrozenRun>> frozen_;
  std::optional<PegRun> peg_;
  std::optional<double> equivalence_;
};

const std::vector<const RunResult*>& Context::TemplateRuns() {
  if (!template_runs_.empty()) return template_runs_;
  const std::vector<std::string> games = {"bilinear", "zerosum", "kelly", "jordan"};
  for (const std::string& kind : games) {
    for (Algorithm alg : {Algorithm::kOptDA, Algorithm::kDSOptMD}) {
      const std::string key = "template/" + kind + "/" + std::string(AlgorithmName(alg));
      template_runs_.push_back(&Cached(key, [&] {
        ExperimentConfig c;
        c.game.kind = kind;
        const GameDefinition game = BuildGame(c.game);
        c.players.assign(game.players(), LearnerSpec{});
        for (LearnerSpec& p : c.players) p.algorithm = alg;
        if (kind == "zerosum") c.players[0].regularizer = "entropy";
        if (kind == "jordan") {
          const ExperimentConfig fig = FigureConfig("jordan");
          for (int i = 0; i < 3; ++i) c.players[i].anchor = fig.players[i].anchor;
        }
        if (kind == "kelly" && alg == Algorithm::kDSOptMD) {
          for (LearnerSpec& p : c.players) p.anchor = "center";
        }
        c.horizon = 10000;
        c.stride = 10000;
        c.regret = false;
        c.template_check = true;
        return c;
      }));
    }
  }
  return template_runs_;
}

// One learner on Box([-1], [1]) against g_t = +1, -1, +1, ...
StreamRun RunStream(Algorithm alg, long horizon) {
  const ActionSet box = ActionSet::Box({-1.0}, {1.0});
  Learner learner(alg, Regularizer::Quadratic(box), RateState::Adaptive(1.0));
  StreamRun out;
  out.label = "stream/" + std::string(AlgorithmName(alg));
  out.regret_over_sqrt.reserve(horizon);
  double realized = 0.0;
  double summed = 0.0;
  for (long t = 1; t <= horizon; ++t) {
    const Vec x = learner.Commit();
    const Vec g = {t % 2 == 1 ? 1.0 : -1.0};
    learner.Ingest(g);
    out.delta.push_back(learner.rate().last_increment);
    realized += g[0] * x[0];
    summed += g[0];
    const Vec best = box.LinearMinimizer(Vec{summed});
    out.regret_over_sqrt.push_back((realized - best[0] * summed) / std::sqrt(double(t)));
    if (t == horizon) {
      out.regret = realized - best[0] * summed;
      const double phi = learner.ArMeasure(best);
      out.bound = (1.0 + phi) * std::sqrt(1.0 + 4.0 * horizon) + 2.0;
      out.eta_over_sqrt = learner.eta() / std::sqrt(double(horizon));
    }
  }
  return out;
}

const std::vector<StreamRun>& Context::Streams() {
  if (!streams_) {
    streams_ = std::vector<StreamRun>{RunStream(Algorithm::kOptDA, 100000),
                                      RunStream(Algorithm::kDSOptMD, 100000)};
  }
  return *streams_;
}

// One learner of the 10 x 10 zero-sum game against a frozen mixed opponent.
const std::vector<FrozenRun>& Context::Frozen() {
  if (frozen_) return *frozen_;
  frozen_.emplace();
  const GameDefinition game = BuildRandomZeroSum(10, 10, 42, 1.0);
  std::mt19937_64 rng(4);
  const Vec opponent = game.action_sets[1].Sample(rng);
  const ActionSet& own = game.action_sets[0];
  struct Variant {
    Algorithm alg;
    bool entropy;
  };
  for (const Variant v : {Variant{Algorithm::kOptDA, false}, Variant{Algorithm::kDSOptMD, false},
                          Variant{Algorithm::kOMWU, true}}) {
    Learner learner(v.alg,
                    v.entropy ? Regularizer::NegativeEntropy(own) : Regularizer::Quadratic(own),
                    RateState::Adaptive(1.0));
    FrozenRun run;
    run.label = "frozen/" + std::string(AlgorithmName(v.alg));
    JointAction x = {own.Center(), opponent};
    for (long t = 1; t <= 10000; ++t) {
      x[0] = learner.Commit();
      learner.Ingest(game.grad(0, x));
      run.delta.push_back(learner.rate().last_increment);
    }
    const BestResponse br = BestResponseSet(game, 0, x);
    run.distance = DistanceToFace(x[0], br.face);
    frozen_->push_back(std::move(run));
  }
  return *frozen_;
}

const PegRun& Context::Peg() {
  if (peg_) return *peg_;
  PegRun out;
  const long horizon = 10000;
  {
    const ExperimentConfig c = FigureConfig("peg-divergence");
    const GameDefinition game = BuildGame(c.game);
    std::vector<Learner> learners = BuildLearners(c, game);
    RoundBuffers round;
    Vec base_sum(2, 0.0), played_sum(2, 0.0);
    for (long t = 1; t <= horizon; ++t) {
      const Vec base = {learners[0].base()[0], learners[1].base()[0]};
      if (t >= 1000) out.min_base_norm = std::min(out.min_base_norm, Norm2(base));
      Axpy(1.0, base, base_sum);
      PlayRound(learners, game, options_.policy, false, t, round);
      played_sum[0] += round.played[0][0];
      played_sum[1] += round.played[1][0];
      out.delta.push_back(learners[0].rate().last_increment);
    }
    out.base_average_norm = Norm2(base_sum) / horizon;
    out.played_average_norm = Norm2(played_sum) / horizon;
  }
  {
    ExperimentConfig c = FigureConfig("peg-divergence");
    for (LearnerSpec& p : c.players) p.fixed_eta = 2.0;
    const GameDefinition game = BuildGame(c.game);
    std::vector<Learner> learners = BuildLearners(c, game);
    RoundBuffers round;
    for (long t = 1; t <= horizon; ++t) PlayRound(learners, game, options_.policy, false, t, round);
    out.contrast_last = std::hypot(round.played[0][0], round.played[1][0]);
  }
  peg_ = out;
  return *peg_;
}

double Context::EquivalenceGap() {
  if (equivalence_) return *equivalence_;
  auto make = [](Algorithm alg) {
    ExperimentConfig c;
    c.game.kind = "zerosum";
    LearnerSpec p;
    p.algorithm = alg;
    p.regularizer = "entropy";
    c.players = {p, p};
    c.horizon = 1000;
    c.stride = 1000;
    c.regret = false;
    c.template_check = false;
    c.keep_trace = true;
    return c;
  };
  const RunResult& a = Cached("equivalence/optda", [&] { return make(Algorithm::kOptDA); });
  const RunResult& b = Cached("equivalence/ds-optmd", [&] { return make(Algorithm::kDSOptMD); });
  double worst = 0.0;
  for (size_t i = 0; i < a.traces.size(); ++i) {
    for (size_t t = 0; t < a.traces[i].played.size(); ++t) {
      worst = std::max(worst, NormInf(Sub(a.traces[i].played[t], b.traces[i].played[t])));
    }
  }
  equivalence_ = worst;
  return worst;
}

void Context::RunEverything() {
  Zerosum();
  Kelly();
  Jordan();
  TemplateRuns();
  Streams();
  Frozen();
  Peg();
  EquivalenceGap();
}

std::vector<DeltaSeries> Context::AllDeltas() {
  std::vector<DeltaSeries> out;
  for (const auto& [key, run] : runs_) {
    const ExperimentConfig& c = configs_.at(key);
    for (size_t i = 0; i < run->delta.size(); ++i) {
      out.push_back({key + "/p" + std::to_string(i + 1), c.players[i].tau, run->delta[i]});
    }
  }
  if (streams_) {
    for (const StreamRun& s : *streams_) out.push_back({s.label, s.tau, s.delta});
  }
  if (frozen_) {
    for (const FrozenRun& f : *frozen_) out.push_back({f.label, f.tau, f.delta});
  }
  if (peg_) out.push_back({"peg", 1.0, peg_->delta});
  return out;
}

// ---------------------------------------------------------------------------
// Criteria

using Check = std::function<CriterionResult(Context&)>;

struct CriterionDef {
  std::string suite;
  std::string id;
  std::string title;
  bool primary;
  Check check;
};

CriterionResult Begin(const CriterionDef& def) {
  CriterionResult r;
  r.suite = def.suite;
  r.id = def.id;
  r.title = def.title;
  r.primary = def.primary;
  return r;
}

CriterionResult GeometryIdentities(Context&) {
  CriterionResult r;
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(2024);
  double three_point = 0.0, fenchel_three_point = 0.0, chain = 0.0, coupling = 0.0, prox = 0.0;
  for (const Family& fam : GeometryFamilies()) {
    const Regularizer& reg = fam.reg;
    const ActionSet& set = reg.domain();
    for (int s = 0; s < 1000; ++s) {
      const Vec p = set.Sample(rng);
      const Vec x = set.Sample(rng);
      const Vec x2 = set.Sample(rng);
      {
        const double lhs = Dot(Sub(reg.Gradient(x2), reg.Gradient(x)), Sub(x, p));
        const double a = Bregman(reg, p, x2), b = Bregman(reg, p, x), c = Bregman(reg, x, x2);
        const double scale = 1.0 + std::abs(a) + std::abs(b) + std::abs(c);
        three_point = std::max(three_point, std::abs(lhs - (a - b - c)) / scale);
      }
      const Vec y = RandomDual(set.dim(), rng);
      const Vec y2 = RandomDual(set.dim(), rng);
      const Vec qy = MirrorMap(reg, y);
      {
        const double a = FenchelCoupling(reg, p, y2), b = FenchelCoupling(reg, p, y);
        const double c = FenchelCoupling(reg, qy, y2);
        const double lhs = Dot(Sub(y2, y), Sub(qy, p));
        const double scale = 1.0 + std::abs(a) + std::abs(b) + std::abs(c);
        fenchel_three_point = std::max(fenchel_three_point, std::abs(a - b - c - lhs) / scale);
      }
      {
        const double f = FenchelCoupling(reg, p, y);
        const double d = Bregman(reg, p, qy);
        const double n = reg.PrimalNorm(Sub(p, qy));
        chain = std::max({chain, d - f, 0.5 * n * n - d});
      }
      {
        const double f = FenchelCoupling(reg, p, reg.Gradient(x));
        const double d = Bregman(reg, p, x);
        coupling = std::max(coupling, std::abs(f - d) / (1.0 + std::abs(d)));
      }
      {
        const Vec g = RandomDual(set.dim(), rng);
        const double eta = 0.1 + 3.0 * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        const Vec out = ProxStep(reg, x, g, eta);
        Vec lin = g;
        Axpy(eta, Sub(reg.Gradient(out), reg.Gradient(x)), lin);
        for (int k = 0; k < 5; ++k) {
          const Vec z = set.Sample(rng);
          prox = std::max(prox, -Dot(lin, Sub(z, out)));
        }
      }
    }
  }
  const double secs = Seconds(start);
  r.measured = {{"three_point_rel", three_point}, {"fenchel_three_point_rel", fenchel_three_point},
                {"chain_violation", chain},       {"coupling_bregman_rel", coupling},
                {"prox_residual", prox},          {"seconds", secs}};
  r.passed = three_point <= 1e-8 && fenchel_three_point <= 1e-8 && chain <= 1e-9 &&
             coupling <= 1e-9 && prox <= 1e-7 && secs < 5.0;
  return r;
}

CriterionResult EnergyInequality(Context& ctx) {
  CriterionResult r;
  const auto start = std::chrono::steady_clock::now();
  const auto& runs = ctx.TemplateRuns();
  const double secs = Seconds(start);
  double worst = kInf;
  for (const RunResult* run : runs) {
    for (double v : run->min_residual) worst = std::min(worst, v);
  }
  r.measured = {{"min_residual", worst}, {"runs", double(runs.size())}, {"seconds", secs}};
  r.passed = worst >= -1e-7 && secs < 60.0;
  return r;
}

CriterionResult AdversarialRegret(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const StreamRun& s : ctx.Streams()) {
    const size_t from = s.regret_over_sqrt.size() / 10 - 1;
    const double ratio = TailMax(s.regret_over_sqrt, from);
    const std::string tag = s.label.substr(s.label.find('/') + 1);
    r.measured.push_back({tag + ".regret", s.regret});
    r.measured.push_back({tag + ".bound", s.bound});
    r.measured.push_back({tag + ".max_regret_over_sqrt_t", ratio});
    ok = ok && s.regret <= s.bound && ratio <= 3.0;
  }
  r.passed = ok;
  return r;
}

// The VS criteria only apply to games passing the stability probe.
double VsGuard(const GameDefinition& game, const JointAction& reference) {
  if (game.nash) return VsProbe(game, StabilityForm::kVariational, 500, 11);
  if (game.zero_sum) return VsProbe(game, StabilityForm::kMonotone, 500, 11);
  GameDefinition copy = game;
  copy.nash = reference;
  return VsProbe(copy, StabilityForm::kVariational, 500, 11);
}

struct VsRun {
  std::string tag;
  const RunResult* run;
  const ExperimentConfig* config;
  double probe;
};

std::vector<VsRun> VsRuns(Context& ctx) {
  std::vector<VsRun> out;
  for (const std::string key : {"zerosum", "kelly"}) {
    const RunResult& run = key == std::string("zerosum") ? ctx.Zerosum() : ctx.Kelly();
    const ExperimentConfig& c = ctx.configs().at(key);
    const double probe = VsGuard(BuildGame(c.game), run.last_played);
    out.push_back({key, &run, &c, probe});
  }
  return out;
}

CriterionResult ConstantSocialRegret(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const VsRun& v : VsRuns(ctx)) {
    const long T = v.config->horizon;
    const double end = RecordAt(*v.run, T).social_regret;
    const double tenth = RecordAt(*v.run, T / 10).social_regret;
    r.measured.push_back({v.tag + ".social_T", end});
    r.measured.push_back({v.tag + ".social_T_over_10", tenth});
    r.measured.push_back({v.tag + ".vs_probe", v.probe});
    ok = ok && v.probe >= -1e-8 && std::abs(end - tenth) <= 0.5;
  }
  r.passed = ok;
  return r;
}

CriterionResult BoundedIndividualRegret(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const VsRun& v : VsRuns(ctx)) {
    const long from = v.config->horizon / 10;
    double worst = 0.0;
    const int n = static_cast<int>(v.run->records.front().regret.size());
    for (int i = 0; i < n; ++i) {
      double lo = kInf, hi = -kInf;
      for (const RunRecord& rec : v.run->records) {
        if (rec.t < from) continue;
        lo = std::min(lo, rec.regret[i]);
        hi = std::max(hi, rec.regret[i]);
      }
      worst = std::max(worst, hi - lo);
    }
    r.measured.push_back({v.tag + ".max_range", worst});
    ok = ok && v.probe >= -1e-8 && worst <= 1.0;
  }
  r.passed = ok;
  return r;
}

CriterionResult RateConvergence(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const VsRun& v : VsRuns(ctx)) {
    double change = 0.0, total = 0.0;
    for (size_t i = 0; i < v.run->delta.size(); ++i) {
      const Vec& d = v.run->delta[i];
      change = std::max(change, RateChange(d, v.config->players[i].tau, d.size() * 9 / 10));
      for (double x : d) total += x;
    }
    r.measured.push_back({v.tag + ".max_eta_change", change});
    r.measured.push_back({v.tag + ".sum_delta", total});
    ok = ok && change < 1e-6 && std::isfinite(total);
  }
  r.passed = ok;
  return r;
}

CriterionResult LastIterate(Context& ctx) {
  CriterionResult r;
  const RunResult& zs = ctx.Zerosum();
  const GameDefinition zgame = BuildGame(ctx.configs().at("zerosum").game);
  double duality = 0.0;
  for (int i = 0; i < zgame.players(); ++i) duality += GapFunction(zgame, zs.last_played, i);

  const RunResult& kl = ctx.Kelly();
  const GameDefinition kgame = BuildGame(ctx.configs().at("kelly").game);
  double step = 0.0;
  for (const Vec& s : kl.step_diff) step = std::max(step, TailMax(s, s.size() - s.size() / 100));
  double gap = 0.0;
  for (int i = 0; i < kgame.players(); ++i) {
    gap = std::max(gap, GapFunction(kgame, kl.last_played, i));
  }
  r.measured = {{"zerosum.duality_gap", duality},
                {"kelly.max_step_diff_final_1pct", step},
                {"kelly.max_gap_function", gap}};
  r.passed = duality <= 1e-3 && step <= 1e-6 && gap <= 1e-3;
  return r;
}

CriterionResult BestResponseCriterion(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const FrozenRun& f : ctx.Frozen()) {
    r.measured.push_back({f.label.substr(f.label.find('/') + 1) + ".l1_distance", f.distance});
    ok = ok && f.distance <= 1e-4;
  }
  r.passed = ok;
  return r;
}

CriterionResult PegCycling(Context& ctx) {
  CriterionResult r;
  const PegRun& p = ctx.Peg();
  r.measured = {{"min_norm_t_ge_1000", p.min_base_norm},
                {"average_distance", p.base_average_norm},
                {"played_average_distance", p.played_average_norm},
                {"contrast_last_distance", p.contrast_last}};
  r.note = "norms and averages of the base iterates x_t; played_average_distance is informational";
  r.passed = p.min_base_norm >= 1.0 && p.base_average_norm >= 0.5 && p.contrast_last <= 1e-3;
  return r;
}

CriterionResult Dichotomy(Context& ctx) {
  CriterionResult r;
  const RunResult& run = ctx.Jordan();
  const long T = ctx.configs().at("jordan").horizon;
  const double end = RecordAt(run, T).social_regret;
  const double tenth = RecordAt(run, T / 10).social_regret;
  // Least-squares slope of the social regret over the last decade.
  double st = 0, ss = 0, stt = 0, sts = 0, n = 0;
  for (const RunRecord& rec : run.records) {
    if (rec.t < T / 10) continue;
    const double t = double(rec.t);
    st += t; ss += rec.social_regret; stt += t * t; sts += t * rec.social_regret; n += 1;
  }
  const double slope = (n * sts - st * ss) / (n * stt - st * st);
  double min_step = kInf;
  for (const Vec& s : run.step_diff) {
    min_step = std::min(min_step, TailMax(s, s.size() - s.size() / 100));
  }
  r.measured = {{"social_T", end}, {"social_T_over_10", tenth}, {"slope", slope},
                {"min_over_players_max_step_diff_final_1pct", min_step}};
  r.passed = end <= -10.0 && end < tenth && slope < 0.0 && min_step >= 0.1;
  return r;
}

CriterionResult AdaptiveSum(Context& ctx) {
  CriterionResult r;
  ctx.RunEverything();
  double worst = kInf;
  int sequences = 0;
  for (const DeltaSeries& d : ctx.AllDeltas()) {
    Vec a;
    a.reserve(d.delta.size() + 1);
    a.push_back(d.tau);
    a.insert(a.end(), d.delta.begin(), d.delta.end());
    const SumCheck c = AdaptiveSumCheck(a);
    worst = std::min(worst, c.rhs - c.lhs);
    ++sequences;
  }
  r.measured = {{"min_slack", worst}, {"sequences", double(sequences)}};
  r.passed = worst >= -1e-10;
  return r;
}

CriterionResult Equivalence(Context& ctx) {
  CriterionResult r;
  const double gap = ctx.EquivalenceGap();
  r.measured = {{"max_abs_difference", gap}};
  r.passed = gap <= 1e-7;
  return r;
}

// Non-primary invariants.

CriterionResult MonotoneRates(Context& ctx) {
  CriterionResult r;
  ctx.RunEverything();
  double worst = 0.0;
  for (const auto& [key, run] : ctx.runs()) {
    for (Vec eta : run->eta) {
      if (ctx.options().tamper_rates) {
        for (size_t t = 0; t < eta.size(); ++t) eta[t] *= 1.0 - 0.5 * t / eta.size();
      }
      for (size_t t = 1; t < eta.size(); ++t) worst = std::max(worst, eta[t - 1] - eta[t]);
    }
  }
  r.measured = {{"max_decrease", worst}};
  r.passed = worst <= 0.0;
  return r;
}

CriterionResult Feasibility(Context& ctx) {
  CriterionResult r;
  ctx.RunEverything();
  long bad = 0;
  for (const auto& [key, run] : ctx.runs()) bad += run->infeasible_commits;
  r.measured = {{"infeasible_commits", double(bad)}};
  r.passed = bad == 0;
  return r;
}

CriterionResult LedgerAdditivity(Context& ctx) {
  CriterionResult r;
  double worst = 0.0;
  for (const RunResult* run : {&ctx.Zerosum(), &ctx.Kelly(), &ctx.Jordan()}) {
    for (const RunRecord& rec : run->records) {
      double total = 0.0;
      for (double v : rec.regret) total += v;
      worst = std::max(worst, std::abs(total - rec.social_regret));
    }
  }
  r.measured = {{"max_difference", worst}};
  r.passed = worst <= 1e-12;
  return r;
}

CriterionResult StabilityProbes(Context& ctx) {
  CriterionResult r;
  const double bilinear = VsProbe(BuildBilinear(-4, 8), StabilityForm::kVariational, 500, 11);
  double zs = 0.0, kelly = 0.0;
  for (const VsRun& v : VsRuns(ctx)) (v.tag == "zerosum" ? zs : kelly) = v.probe;
  const double jordan = VsProbe(BuildJordan(), StabilityForm::kVariational, 500, 11);
  r.measured = {{"bilinear", bilinear}, {"zerosum", zs}, {"kelly", kelly}, {"jordan", jordan}};
  r.note = "jordan is not variationally stable; its probe is reported for reference";
  r.passed = bilinear >= -1e-8 && zs >= -1e-8 && kelly >= -1e-8;
  return r;
}

CriterionResult AdversarialRateGrowth(Context& ctx) {
  CriterionResult r;
  bool ok = true;
  for (const StreamRun& s : ctx.Streams()) {
    r.measured.push_back({s.label.substr(s.label.find('/') + 1) + ".eta_over_sqrt_t",
                          s.eta_over_sqrt});
    ok = ok && s.eta_over_sqrt >= 1.9 && s.eta_over_sqrt <= 2.1;
  }
  r.passed = ok;
  return r;
}

const std::vector<CriterionDef>& Criteria() {
  static const std::vector<CriterionDef> defs = {
      {"geometry", "geometry-identities",
       "three-point identities, Fenchel chain, coupling at gradients, prox optimality", true,
       GeometryIdentities},
      {"template", "energy-inequality",
       "per-step energy inequality over 1e4-step OptDA and DS-OptMD runs on four games", true,
       EnergyInequality},
      {"regret", "adversarial-regret", "sqrt(T) regret against the alternating +-1 stream", true,
       AdversarialRegret},
      {"regret", "constant-social-regret", "social regret plateau between T/10 and T", true,
       ConstantSocialRegret},
      {"regret", "bounded-individual-regret",
       "individual regret range over the final 90% of rounds", true, BoundedIndividualRegret},
      {"regret", "rate-convergence", "learning rates settle over the final 10% of rounds", true,
       RateConvergence},
      {"convergence", "last-iterate", "last-iterate convergence in the zero-sum and Kelly runs",
       true, LastIterate},
      {"convergence", "best-response", "best response against a frozen opponent", true,
       BestResponseCriterion},
      {"figure", "peg-cycling", "constant-step PEG cycles on [-4, 8]^2; a smaller step converges",
       true, PegCycling},
      {"convergence", "dichotomy",
       "matching pennies: social regret to minus infinity, no Cauchy convergence", true,
       Dichotomy},
      {"regret", "adaptive-sum", "adaptive sum inequality on every realized increment sequence",
       true, AdaptiveSum},
      {"equivalence", "optda-dsoptmd-equivalence",
       "OptDA and DS-OptMD agree under entropy with the uniform anchor", true, Equivalence},
      {"invariants", "monotone-rates", "learning rates never decrease", false, MonotoneRates},
      {"invariants", "feasibility", "every played point lies in its action set", false,
       Feasibility},
      {"invariants", "ledger-additivity", "social regret equals the sum of individual regrets",
       false, LedgerAdditivity},
      {"invariants", "stability-probe", "variational stability probes of the VS games", false,
       StabilityProbes},
      {"invariants", "adversarial-rate-growth", "eta_T / sqrt(T) against the +-1 stream", false,
       AdversarialRateGrowth},
  };
  return defs;
}

}  // namespace

std::vector<std::string> SuiteNames() {
  return {"geometry", "template", "regret", "convergence", "figure", "equivalence", "invariants",
          "all"};
}

std::vector<CriterionResult> RunVerify(const std::string& selector, const VerifyOptions& options) {
  const auto suites = SuiteNames();
  bool known = std::find(suites.begin(), suites.end(), selector) != suites.end();
  for (const CriterionDef& d : Criteria()) known = known || d.id == selector;
  if (!known) throw ConfigError("unknown verify suite or criterion '" + selector + "'");

  Context ctx(options);
  std::vector<CriterionResult> out;
  for (const CriterionDef& d : Criteria()) {
    if (selector != "all" && selector != d.suite && selector != d.id) continue;
    CriterionResult r = Begin(d);
    try {
      const CriterionResult body = d.check(ctx);
      r.passed = body.passed;
      r.measured = body.measured;
      r.note = body.note;
    } catch (const NumericalAbort&) {
      throw;
    } catch (const std::exception& e) {
      r.passed = false;
      r.note = std::string("error: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string FormatResultJson(const CriterionResult& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["id"] = r.id;
  j["primary"] = r.primary;
  j["passed"] = r.passed;
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.measured) {
    m[k] = std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(FormatDouble(v));
  }
  j["measured"] = m;
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string FormatResultLine(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.id << ": " << r.title;
  for (const auto& [k, v] : r.measured) os << ' ' << k << '=' << FormatDouble(v);
  return os.str();
}

}  // namespace adaptplay
