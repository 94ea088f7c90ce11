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

#include "adaptplay/harness.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "json.hpp"

namespace adaptplay {
namespace {

namespace pt = boost::property_tree;

using Table = std::map<std::string, std::string>;

std::string Trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n\"");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n\"");
  return s.substr(first, last - first + 1);
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T out{};
  const std::string v = Trim(value);
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) {
    throw ConfigError("config key '" + key + "': cannot parse '" + value + "'");
  }
  return out;
}

bool ParseBool(const std::string& key, const std::string& value) {
  const std::string v = Trim(value);
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

Vec ParseVector(const std::string& key, const std::string& value) {
  std::string v = value;
  std::replace(v.begin(), v.end(), ',', ' ');
  std::istringstream is(v);
  Vec out;
  std::string tok;
  while (is >> tok) out.push_back(ParseNumber<double>(key, tok));
  if (out.empty()) throw ConfigError("config key '" + key + "': empty vector");
  return out;
}

std::vector<Vec> ParseMatrix(const std::string& key, const std::string& value) {
  std::vector<Vec> rows;
  std::istringstream is(value);
  std::string row;
  while (std::getline(is, row, ';')) {
    if (!Trim(row).empty()) rows.push_back(ParseVector(key, row));
  }
  return rows;
}

void ApplyGameKey(GameSpec& g, const std::string& key, const std::string& value) {
  const std::string k = "game." + key;
  if (key == "kind") g.kind = Trim(value);
  else if (key == "rows") g.rows = ParseNumber<int>(k, value);
  else if (key == "cols") g.cols = ParseNumber<int>(k, value);
  else if (key == "seed") g.seed = ParseNumber<std::uint64_t>(k, value);
  else if (key == "range") g.range = ParseNumber<double>(k, value);
  else if (key == "lower") g.lower = ParseNumber<double>(k, value);
  else if (key == "upper") g.upper = ParseNumber<double>(k, value);
  else if (key == "resources") g.resources = ParseNumber<int>(k, value);
  else if (key == "bidders") g.bidders = ParseNumber<int>(k, value);
  else if (key == "matrix") g.matrix = ParseMatrix(k, value);
  else throw ConfigError("unknown config key '" + k + "'");
}

void ApplyRunKey(ExperimentConfig& c, const std::string& key, const std::string& value) {
  const std::string k = "run." + key;
  if (key == "horizon") c.horizon = ParseNumber<long>(k, value);
  else if (key == "stride") c.stride = ParseNumber<long>(k, value);
  else if (key == "probe_seed") c.probe_seed = ParseNumber<std::uint64_t>(k, value);
  else if (key == "template_check") c.template_check = ParseBool(k, value);
  else if (key == "regret") c.regret = ParseBool(k, value);
  else if (key == "merge_tolerance") c.ledger.merge_tolerance = ParseNumber<double>(k, value);
  else if (key == "oracle_iterations") c.ledger.oracle.max_iterations = ParseNumber<int>(k, value);
  else if (key == "oracle_restarts") c.ledger.oracle.restarts = ParseNumber<int>(k, value);
  else if (key == "oracle_seed") c.ledger.oracle.seed = ParseNumber<std::uint64_t>(k, value);
  else if (key == "policy") {
    const std::string v = Trim(value);
    if (v == "serial") c.policy = ExecPolicy::kSerial;
    else if (v == "openmp") c.policy = ExecPolicy::kOpenMP;
    else throw ConfigError("run.policy must be serial or openmp");
  } else {
    throw ConfigError("unknown config key '" + k + "'");
  }
}

void ApplyPlayerKey(LearnerSpec& p, const std::string& section, const std::string& key,
                    const std::string& value) {
  const std::string k = section + "." + key;
  if (key == "algorithm") p.algorithm = ParseAlgorithm(Trim(value));
  else if (key == "regularizer") {
    const std::string v = Trim(value);
    if (v != "euclidean" && v != "entropy") {
      throw ConfigError(k + " must be euclidean or entropy");
    }
    p.regularizer = v;
  } else if (key == "tau") p.tau = ParseNumber<double>(k, value);
  else if (key == "eta") {
    const std::string v = Trim(value);
    if (v == "adaptive" || v.empty()) p.fixed_eta.reset();
    else p.fixed_eta = ParseNumber<double>(k, v);
  } else if (key == "anchor") p.anchor = Trim(value);
  else throw ConfigError("unknown config key '" + k + "'");
}

int PlayerCount(const GameSpec& g) {
  if (g.kind == "zerosum" || g.kind == "matrix" || g.kind == "bilinear") return 2;
  if (g.kind == "kelly") return g.bidders;
  if (g.kind == "jordan") return 3;
  throw ConfigError("unknown game kind '" + g.kind + "'");
}

struct Sections {
  std::map<std::string, Table> tables;  // section -> key -> value
  Table top;
};

void SplitOverride(const std::string& ov, Sections& s) {
  const auto eq = ov.find('=');
  if (eq == std::string::npos) throw ConfigError("override '" + ov + "' is not key=value");
  const std::string path = Trim(ov.substr(0, eq));
  const std::string value = ov.substr(eq + 1);
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) {
    s.top[path] = value;
  } else {
    s.tables[path.substr(0, dot)][path.substr(dot + 1)] = value;
  }
}

std::string Join(ConstSpan v) {
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (k) out += ' ';
    out += FormatDouble(v[k]);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Config

ExperimentConfig ParseConfig(const std::string& text, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  std::istringstream is(text);
  try {
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  Sections s;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      s.top[name] = node.data();
      continue;
    }
    for (const auto& [key, leaf] : node) s.tables[name][key] = leaf.data();
  }
  for (const std::string& ov : overrides) SplitOverride(ov, s);

  ExperimentConfig c;
  for (const auto& [key, value] : s.top) {
    if (key == "schema") c.schema = ParseNumber<int>(key, value);
    else throw ConfigError("unknown top-level config key '" + key + "'");
  }
  if (c.schema != kConfigSchemaVersion) {
    throw ConfigError("unsupported config schema " + std::to_string(c.schema));
  }
  for (const auto& [key, value] : s.tables["game"]) ApplyGameKey(c.game, key, value);
  for (const auto& [key, value] : s.tables["run"]) ApplyRunKey(c, key, value);

  const int n = PlayerCount(c.game);
  LearnerSpec defaults;
  for (const auto& [key, value] : s.tables["players"]) ApplyPlayerKey(defaults, "players", key, value);
  c.players.assign(n, defaults);
  for (const auto& [section, table] : s.tables) {
    if (section == "game" || section == "run" || section == "players") continue;
    if (section.rfind("player.", 0) != 0) throw ConfigError("unknown config section [" + section + "]");
    const int idx = ParseNumber<int>(section, section.substr(7));
    if (idx < 1 || idx > n) {
      throw ConfigError("[" + section + "] does not match a player of a " + std::to_string(n) +
                        "-player game");
    }
    for (const auto& [key, value] : table) ApplyPlayerKey(c.players[idx - 1], section, key, value);
  }
  if (c.horizon < 1) throw ConfigError("run.horizon must be >= 1");
  if (c.stride < 1) throw ConfigError("run.stride must be >= 1");
  return c;
}

ExperimentConfig LoadConfig(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ParseConfig(ss.str(), overrides);
}

std::string FormatConfig(const ExperimentConfig& c) {
  std::ostringstream os;
  os << "schema = " << c.schema << "\n\n[game]\nkind = " << c.game.kind << "\n";
  if (c.game.kind == "zerosum") {
    os << "rows = " << c.game.rows << "\ncols = " << c.game.cols << "\nseed = " << c.game.seed
       << "\nrange = " << FormatDouble(c.game.range) << "\n";
  } else if (c.game.kind == "kelly") {
    os << "resources = " << c.game.resources << "\nbidders = " << c.game.bidders
       << "\nseed = " << c.game.seed << "\n";
  } else if (c.game.kind == "bilinear") {
    os << "lower = " << FormatDouble(c.game.lower) << "\nupper = " << FormatDouble(c.game.upper)
       << "\n";
  } else if (c.game.kind == "matrix") {
    os << "matrix = ";
    for (size_t r = 0; r < c.game.matrix.size(); ++r) {
      os << (r ? "; " : "") << Join(c.game.matrix[r]);
    }
    os << "\n";
  }
  os << "\n[run]\nhorizon = " << c.horizon << "\nstride = " << c.stride
     << "\nprobe_seed = " << c.probe_seed
     << "\ntemplate_check = " << (c.template_check ? "true" : "false")
     << "\nregret = " << (c.regret ? "true" : "false")
     << "\npolicy = " << (c.policy == ExecPolicy::kSerial ? "serial" : "openmp")
     << "\nmerge_tolerance = " << FormatDouble(c.ledger.merge_tolerance)
     << "\noracle_iterations = " << c.ledger.oracle.max_iterations
     << "\noracle_restarts = " << c.ledger.oracle.restarts
     << "\noracle_seed = " << c.ledger.oracle.seed << "\n";
  for (size_t i = 0; i < c.players.size(); ++i) {
    const LearnerSpec& p = c.players[i];
    os << "\n[player." << i + 1 << "]\nalgorithm = " << AlgorithmName(p.algorithm)
       << "\nregularizer = " << p.regularizer << "\ntau = " << FormatDouble(p.tau)
       << "\neta = " << (p.fixed_eta ? FormatDouble(*p.fixed_eta) : "adaptive")
       << "\nanchor = " << p.anchor << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Construction

GameDefinition BuildGame(const GameSpec& spec) {
  if (spec.kind == "zerosum") return BuildRandomZeroSum(spec.rows, spec.cols, spec.seed, spec.range);
  if (spec.kind == "matrix") return BuildMatrixZeroSum(spec.matrix);
  if (spec.kind == "kelly") return BuildKelly(spec.resources, spec.bidders, spec.seed);
  if (spec.kind == "jordan") return BuildJordan();
  if (spec.kind == "bilinear") return BuildBilinear(spec.lower, spec.upper);
  throw ConfigError("unknown game kind '" + spec.kind + "'");
}

std::vector<Learner> BuildLearners(const ExperimentConfig& config, const GameDefinition& game) {
  if (static_cast<int>(config.players.size()) != game.players()) {
    throw ConfigError("config lists " + std::to_string(config.players.size()) +
                      " learners for a " + std::to_string(game.players()) + "-player game");
  }
  std::vector<Learner> out;
  out.reserve(game.players());
  for (int i = 0; i < game.players(); ++i) {
    const LearnerSpec& spec = config.players[i];
    const ActionSet& set = game.action_sets[i];
    Regularizer reg = spec.regularizer == "entropy" ? Regularizer::NegativeEntropy(set)
                                                    : Regularizer::Quadratic(set);
    RateState rate = spec.fixed_eta ? RateState::Fixed(*spec.fixed_eta)
                                    : RateState::Adaptive(spec.tau);
    std::optional<Vec> anchor;
    if (spec.anchor == "center") {
      anchor = set.Center();
    } else if (spec.anchor != "argmin" && !spec.anchor.empty()) {
      anchor = ParseVector("anchor", spec.anchor);
      if (static_cast<int>(anchor->size()) != set.dim()) {
        throw ConfigError("anchor of player " + std::to_string(i + 1) + " has wrong dimension");
      }
    }
    out.emplace_back(spec.algorithm, std::move(reg), std::move(rate), std::move(anchor));
  }
  return out;
}

std::vector<std::vector<Vec>> ProbePoints(const GameDefinition& game, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vec>> out(game.players());
  for (int i = 0; i < game.players(); ++i) {
    const ActionSet& set = game.action_sets[i];
    if (game.nash) out[i].push_back((*game.nash)[i]);
    out[i].push_back(set.Center());
    for (int s = 0; s < 3; ++s) out[i].push_back(set.Sample(rng));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simulation

RunResult RunExperiment(const ExperimentConfig& config) {
  if (config.horizon < 1) throw ConfigError("run.horizon must be >= 1");
  if (config.stride < 1) throw ConfigError("run.stride must be >= 1");
  const GameDefinition game = BuildGame(config.game);
  std::vector<Learner> learners = BuildLearners(config, game);
  const int n = game.players();
  const long T = config.horizon;

  RegretLedger ledger(game, config.ledger);
  const auto probes = ProbePoints(game, config.probe_seed);
  bool any_template = false;
  for (const Learner& l : learners) any_template |= l.HasTemplate();
  const bool check_template = config.template_check && any_template;

  RunResult result;
  result.game_name = game.name;
  result.delta.assign(n, Vec());
  result.step_diff.assign(n, Vec());
  result.eta.assign(n, Vec());
  for (int i = 0; i < n; ++i) {
    result.delta[i].reserve(T);
    result.step_diff[i].reserve(T);
    result.eta[i].reserve(T);
  }
  result.min_residual.assign(n, std::numeric_limits<double>::infinity());
  if (config.keep_trace) {
    result.traces.resize(n);
    for (int i = 0; i < n; ++i) result.traces[i].eta.push_back(learners[i].eta());
  }

  Vec window_residual(n, std::numeric_limits<double>::infinity());
  JointAction previous;
  RoundBuffers round;
  for (long t = 1; t <= T; ++t) {
    Vec eta_t(n);
    for (int i = 0; i < n; ++i) eta_t[i] = learners[i].eta();
    PlayRound(learners, game, config.policy, check_template, t, round);
    ledger.Record(round.played, round.feedback);

    Vec step(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double d = learners[i].rate().last_increment;
      result.delta[i].push_back(d);
      if (t > 1) {
        step[i] = learners[i].regularizer().PrimalNorm(Sub(round.played[i], previous[i]));
      }
      result.step_diff[i].push_back(step[i]);
      result.eta[i].push_back(eta_t[i]);
      if (!game.action_sets[i].Contains(round.played[i])) ++result.infeasible_commits;
      if (config.keep_trace) {
        PlayerTrace& tr = result.traces[i];
        tr.played.push_back(round.played[i]);
        tr.feedback.push_back(round.feedback[i]);
        tr.eta.push_back(learners[i].eta());
      }
    }
    if (check_template) {
      const Vec res = TemplateResiduals(learners, round, probes, config.policy);
      for (int i = 0; i < n; ++i) {
        window_residual[i] = std::min(window_residual[i], res[i]);
        result.min_residual[i] = std::min(result.min_residual[i], res[i]);
      }
    }

    if (t == 1 || t % config.stride == 0 || t == T) {
      RunRecord rec;
      rec.t = t;
      rec.played = round.played;
      rec.eta = eta_t;
      rec.step_diff = step;
      rec.residual = window_residual;
      for (int i = 0; i < n; ++i) {
        rec.delta.push_back(result.delta[i].back());
        rec.loss.push_back(game.loss(i, round.played));
      }
      if (config.regret) {
        const std::vector<RegretValue> regrets = RegretCheckpoint(ledger, config.policy);
        for (const RegretValue& r : regrets) {
          rec.regret.push_back(r.regret);
          rec.oracle_gap = std::max(rec.oracle_gap, r.oracle_gap);
        }
        rec.social_regret = SocialRegret(regrets);
      } else {
        rec.regret.assign(n, std::numeric_limits<double>::quiet_NaN());
        rec.social_regret = std::numeric_limits<double>::quiet_NaN();
      }
      if (game.nash) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
          const Vec d = Sub(round.played[i], (*game.nash)[i]);
          s += Dot(d, d);
        }
        rec.distance_to_target = std::sqrt(s);
      }
      for (double& v : rec.loss) {
        if (!std::isfinite(v)) throw NumericalAbort("non-finite loss", t);
      }
      result.records.push_back(std::move(rec));
      window_residual.assign(n, std::numeric_limits<double>::infinity());
    }
    previous = round.played;
  }
  result.last_played = round.played;
  result.learners = std::move(learners);
  return result;
}

// ---------------------------------------------------------------------------
// Output

std::string FormatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string TrajectoryCsv(const RunResult& run) {
  std::ostringstream os;
  if (run.records.empty()) return "";
  const RunRecord& first = run.records.front();
  const int n = static_cast<int>(first.played.size());
  os << "t";
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < first.played[i].size(); ++k) os << ",x" << i + 1 << "_" << k + 1;
  for (int i = 0; i < n; ++i) os << ",loss" << i + 1;
  for (int i = 0; i < n; ++i) os << ",stepdiff" << i + 1;
  os << ",dist_target\n";
  for (const RunRecord& r : run.records) {
    os << r.t;
    for (const Vec& x : r.played)
      for (double v : x) os << ',' << FormatDouble(v);
    for (double v : r.loss) os << ',' << FormatDouble(v);
    for (double v : r.step_diff) os << ',' << FormatDouble(v);
    os << ',' << (r.distance_to_target ? FormatDouble(*r.distance_to_target) : "nan") << '\n';
  }
  return os.str();
}

std::string RegretCsv(const RunResult& run) {
  std::ostringstream os;
  if (run.records.empty()) return "";
  const int n = static_cast<int>(run.records.front().played.size());
  os << "t";
  for (int i = 0; i < n; ++i) os << ",reg" << i + 1;
  os << ",social,oracle_gap\n";
  for (const RunRecord& r : run.records) {
    os << r.t;
    for (double v : r.regret) os << ',' << FormatDouble(v);
    os << ',' << FormatDouble(r.social_regret) << ',' << FormatDouble(r.oracle_gap) << '\n';
  }
  return os.str();
}

std::string RatesCsv(const RunResult& run) {
  std::ostringstream os;
  if (run.records.empty()) return "";
  const int n = static_cast<int>(run.records.front().played.size());
  os << "t";
  for (int i = 0; i < n; ++i) os << ",eta" << i + 1;
  for (int i = 0; i < n; ++i) os << ",delta" << i + 1;
  os << '\n';
  for (const RunRecord& r : run.records) {
    os << r.t;
    for (double v : r.eta) os << ',' << FormatDouble(v);
    for (double v : r.delta) os << ',' << FormatDouble(v);
    os << '\n';
  }
  return os.str();
}

std::string ResidualsCsv(const RunResult& run) {
  std::ostringstream os;
  if (run.records.empty()) return "";
  const int n = static_cast<int>(run.records.front().played.size());
  os << "t";
  for (int i = 0; i < n; ++i) os << ",resid" << i + 1;
  os << '\n';
  for (const RunRecord& r : run.records) {
    os << r.t;
    for (double v : r.residual) os << ',' << (std::isinf(v) ? "nan" : FormatDouble(v));
    os << '\n';
  }
  return os.str();
}

std::string MetadataJson(const ExperimentConfig& config, const RunResult& run) {
  nlohmann::ordered_json j;
  j["csv_schema"] = kCsvSchemaVersion;
  j["config_schema"] = config.schema;
  j["game"] = run.game_name;
  j["horizon"] = config.horizon;
  j["stride"] = config.stride;
  j["oracle"] = {{"max_iterations", config.ledger.oracle.max_iterations},
                 {"restarts", config.ledger.oracle.restarts},
                 {"seed", config.ledger.oracle.seed},
                 {"merge_tolerance", config.ledger.merge_tolerance}};
  nlohmann::ordered_json players = nlohmann::ordered_json::array();
  for (size_t i = 0; i < run.learners.size(); ++i) {
    const Learner& l = run.learners[i];
    double total = 0.0;
    for (double d : run.delta[i]) total += d;
    players.push_back({{"algorithm", std::string(AlgorithmName(l.algorithm()))},
                       {"regularizer", l.regularizer().Describe()},
                       {"final_eta", l.eta()},
                       {"sum_delta", total},
                       {"min_template_residual",
                        std::isinf(run.min_residual[i]) ? nlohmann::ordered_json(nullptr)
                                                        : nlohmann::ordered_json(run.min_residual[i])}});
  }
  j["players"] = players;
  return j.dump(2) + "\n";
}

void WriteRun(const ExperimentConfig& config, const RunResult& run, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(std::filesystem::path(dir) / name, std::ios::binary);
    if (!out) throw ConfigError("cannot write '" + name + "' in " + dir);
    out << body;
  };
  write("trajectory.csv", TrajectoryCsv(run));
  write("regret.csv", RegretCsv(run));
  write("rates.csv", RatesCsv(run));
  write("residuals.csv", ResidualsCsv(run));
  write("meta.json", MetadataJson(config, run));
}

// ---------------------------------------------------------------------------
// Figures

std::vector<std::string> FigureNames() { return {"peg-divergence", "zerosum", "kelly", "jordan"}; }

ExperimentConfig FigureConfig(const std::string& name) {
  ExperimentConfig c;
  if (name == "peg-divergence") {
    c.game.kind = "bilinear";
    c.game.lower = -4.0;
    c.game.upper = 8.0;
    LearnerSpec peg;
    peg.algorithm = Algorithm::kOptMD;
    peg.fixed_eta = 1.0 / 0.7;
    peg.anchor = "1";
    c.players = {peg, peg};
    c.horizon = 10000;
    c.stride = 1;
    return c;
  }
  if (name == "zerosum") {
    c.game.kind = "zerosum";
    c.game.rows = c.game.cols = 10;
    c.game.seed = 42;
    LearnerSpec a, b;
    a.algorithm = b.algorithm = Algorithm::kDSOptMD;
    a.regularizer = "entropy";
    a.anchor = "argmin";
    b.regularizer = "euclidean";
    b.anchor = "center";
    c.players = {a, b};
    c.horizon = 100000;
    c.stride = 100;
    return c;
  }
  if (name == "kelly") {
    c.game.kind = "kelly";
    c.game.resources = 6;
    c.game.bidders = 20;
    c.game.seed = 42;
    c.players.resize(20);
    for (int i = 0; i < 20; ++i) {
      c.players[i].algorithm = i % 2 == 0 ? Algorithm::kOptDA : Algorithm::kDSOptMD;
      c.players[i].anchor = "center";
    }
    c.horizon = 100000;
    c.stride = 1000;
    return c;
  }
  if (name == "jordan") {
    c.game.kind = "jordan";
    LearnerSpec p;
    p.algorithm = Algorithm::kDSOptMD;
    c.players = {p, p, p};
    // The uniform profile is the equilibrium, so start away from it.
    c.players[0].anchor = "0.9 0.1";
    c.players[1].anchor = "0.3 0.7";
    c.players[2].anchor = "0.6 0.4";
    c.horizon = 100000;
    c.stride = 100;
    return c;
  }
  throw ConfigError("unknown figure '" + name + "'");
}

void ReproduceFigure(const std::string& name, const std::string& dir) {
  const ExperimentConfig c = FigureConfig(name);
  const RunResult run = RunExperiment(c);
  std::filesystem::create_directories(dir);
  std::ofstream(std::filesystem::path(dir) / "trajectory.csv", std::ios::binary) << TrajectoryCsv(run);
  std::ofstream(std::filesystem::path(dir) / "regret.csv", std::ios::binary) << RegretCsv(run);
}

std::vector<GameInfo> ListGames() {
  return {
      {"bilinear", "two players, l1 = theta*phi = -l2 on [lower, upper]^2"},
      {"zerosum", "mixed extension of a rows x cols zero-sum game, entries U[-range, range]"},
      {"matrix", "mixed extension of an explicit zero-sum cost matrix"},
      {"kelly", "Kelly auction: resources K, bidders N, q,g ~ U[4,6], c = 1, b ~ U[5,10]"},
      {"jordan", "three-player matching pennies (1 matches 2, 2 matches 3, 3 mismatches 1)"},
  };
}

}  // namespace adaptplay
