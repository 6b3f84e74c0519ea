// Copyright 2026 The EGTA Authors
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

// Command-line front end. Everything goes through the C API in egta.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "egta/egta.h"
#include "json.hpp"
#include "svg_plot.hpp"

namespace {

using json = nlohmann::json;

// ---- C API plumbing ---------------------------------------------------------

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void Check(egta_status status) {
  if (status == EGTA_OK) return;
  std::string message = egta_status_string(status);
  const std::string detail = egta_last_error();
  if (!detail.empty()) message += ": " + detail;
  throw CliError(message);
}

std::string TakeString(char* s) {
  std::string out(s);
  egta_string_free(s);
  return out;
}

struct GameDeleter {
  void operator()(egta_game* g) const { egta_game_free(g); }
};
struct CongestionDeleter {
  void operator()(egta_congestion* g) const { egta_congestion_free(g); }
};
struct SimulatorDeleter {
  void operator()(egta_simulator* s) const { egta_simulator_free(s); }
};
using GamePtr = std::unique_ptr<egta_game, GameDeleter>;
using CongestionPtr = std::unique_ptr<egta_congestion, CongestionDeleter>;
using SimulatorPtr = std::unique_ptr<egta_simulator, SimulatorDeleter>;

std::string ReadFile(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError("cannot write '" + path + "'");
  out << text;
  if (!out) throw CliError("write to '" + path + "' failed");
}

// ---- experiment flags --------------------------------------------------------

enum class Kind { kInt, kUInt, kDouble, kString, kIntList, kDoubleList, kStringList };

struct FlagDef {
  const char* flag;
  const char* key;
  Kind kind;
  const char* help;
};

struct PlotDef {
  const char* x;
  std::vector<const char*> y;       // one series per y column ...
  std::vector<const char*> group;   // ... per distinct value of these columns
  bool log_x, log_y, markers_only;
  const char* y_label;
};

struct ExperimentDef {
  const char* name;
  std::vector<FlagDef> flags;
  std::optional<PlotDef> plot;
};

const FlagDef kSeed{"--seed", "seed", Kind::kUInt, "master seed"};
const FlagDef kThreads{"--threads", "threads", Kind::kUInt, "worker threads"};
const FlagDef kReps{"--reps", "reps", Kind::kInt, "replications"};
const FlagDef kDelta{"--delta", "delta", Kind::kDouble, "failure probability"};
const FlagDef kNoise{"--noise-d", "noise_d", Kind::kDouble, "uniform noise width d"};
const FlagDef kBound{"--bound", "bound", Kind::kString, "hoeffding | 1era"};
const FlagDef kPlayers{"--players", "players", Kind::kInt, "players"};
const FlagDef kFacilities{"--facilities", "facilities", Kind::kInt, "congestion facilities"};
const FlagDef kK{"--k", "k", Kind::kInt, "strategies per player"};
const FlagDef kAlpha{"--alpha", "alpha", Kind::kDouble, "facility inclusion decay"};
const FlagDef kU0{"--u0", "u0", Kind::kDouble, "random-game utility bound"};

std::vector<ExperimentDef> Experiments() {
  return {
      {"eps-vs-samples",
       {kSeed, kThreads, kReps, kDelta, kBound, kPlayers, kFacilities, kK, kAlpha,
        {"--noise-d", "d_values", Kind::kDoubleList, "noise widths (comma list)"},
        {"--m-values", "m_values", Kind::kIntList, "sample sizes (comma list)"}},
       PlotDef{"m", {"mean_eps"}, {"d"}, true, true, false, "mean eps"}},
      {"nash-frequency",
       {kSeed, kThreads, kReps, kDelta, kNoise, kBound, kPlayers, kFacilities, kK, kAlpha,
        {"--m-values", "m_values", Kind::kIntList, "sample sizes (comma list)"},
        {"--profiles", "profiles", Kind::kUInt, "fixture profile count"},
        {"--search-limit", "search_limit", Kind::kUInt, "fixture seed search limit"}},
       PlotDef{"m", {"frequency"}, {"profile"}, true, false, false, "frequency"}},
      {"success-rate",
       {kSeed, kThreads, kReps, kNoise, kPlayers, kK, kFacilities, kAlpha, kU0,
        {"--delta", "deltas", Kind::kDoubleList, "failure probabilities (comma list)"},
        {"--rhos", "rhos", Kind::kDoubleList, "contraction factors (comma list)"},
        {"--m", "m", Kind::kUInt, "samples per utility"},
        {"--families", "families", Kind::kStringList, "rc,rg"},
        {"--bound", "bounds", Kind::kStringList, "bounds (comma list)"},
        {"--rc-k", "rc_k", Kind::kInt, "strategies per player in RC games"}},
       PlotDef{"delta", {"success_rate"}, {"family", "bound", "rho"}, false, false, false,
               "success rate"}},
      {"gs-vs-psp",
       {kSeed, kThreads, kReps, kDelta, kNoise, kBound, kU0,
        {"--players", "players", Kind::kIntList, "player counts (comma list)"},
        {"--k", "k", Kind::kIntList, "strategy counts (comma list)"},
        {"--m0", "m0", Kind::kUInt, "initial PSP sample size"},
        {"--budget", "budget", Kind::kUInt, "largest PSP sample size"}},
       PlotDef{"game_size", {"eps_psp", "eps_gs"}, {}, true, false, true, "eps"}},
      {"bound-compare-factored",
       {kDelta,
        {"--players-max", "players_max", Kind::kInt, "largest |P|"},
        {"--strategies", "strategies", Kind::kDouble, "strategies per player"},
        {"--m", "m", Kind::kDouble, "samples"},
        {"--c", "c", Kind::kDouble, "utility range"},
        {"--a0", "a0", Kind::kDouble, "sub-Gaussian scale of the residual"},
        {"--scales", "scales", Kind::kDoubleList, "factor scales (comma list of 5)"}},
       PlotDef{"players", {"hoeffding", "rademacher"}, {}, false, false, false, "eps"}},
      {"bound-compare-vns",
       {kDelta,
        {"--players-max", "players_max", Kind::kInt, "largest |P|"},
        {"--strategies", "strategies", Kind::kDouble, "strategies per player"},
        {"--m", "m", Kind::kDouble, "samples"},
        {"--a", "a", Kind::kDouble, "sub-Gaussian scale"},
        {"--c", "c", Kind::kDouble, "largest noise scale"}},
       PlotDef{"players", {"hoeffding", "rademacher"}, {}, false, false, false, "eps"}},
      {"ppa-demo", {}, std::nullopt},
  };
}

std::vector<std::string> SplitList(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw CliError("empty list '" + text + "'");
  return out;
}

json ConvertScalar(const std::string& text, Kind kind, const std::string& flag) {
  try {
    std::size_t used = 0;
    json value;
    switch (kind) {
      case Kind::kInt:
      case Kind::kIntList:
        value = std::stoll(text, &used);
        break;
      case Kind::kUInt:
        if (!text.empty() && text[0] == '-') throw std::invalid_argument("negative");
        value = std::stoull(text, &used);
        break;
      case Kind::kDouble:
      case Kind::kDoubleList:
        value = std::stod(text, &used);
        break;
      default:
        return text;
    }
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::logic_error&) {
    throw CliError(flag + ": cannot parse '" + text + "'");
  }
}

json ConvertFlag(const std::string& text, const FlagDef& def) {
  switch (def.kind) {
    case Kind::kIntList:
    case Kind::kDoubleList:
    case Kind::kStringList: {
      json list = json::array();
      for (const auto& item : SplitList(text)) list.push_back(ConvertScalar(item, def.kind, def.flag));
      return list;
    }
    default:
      return ConvertScalar(text, def.kind, def.flag);
  }
}

// ---- CSV → SVG -------------------------------------------------------------

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::size_t Column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    throw CliError("CSV has no column '" + name + "'");
  }
};

Csv ParseCsv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream row(line);
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (csv.header.empty())
      csv.header = std::move(cells);
    else
      csv.rows.push_back(std::move(cells));
  }
  return csv;
}

std::string Plot(const std::string& title, const PlotDef& def, const std::string& csv_text) {
  const Csv csv = ParseCsv(csv_text);
  const std::size_t x = csv.Column(def.x);
  std::vector<std::size_t> groups;
  for (const char* g : def.group) groups.push_back(csv.Column(g));
  std::map<std::string, egta_cli::Series> series;
  std::vector<std::string> order;
  for (const char* y_name : def.y) {
    const std::size_t y = csv.Column(y_name);
    for (const auto& row : csv.rows) {
      std::string name = def.y.size() > 1 ? y_name : "";
      for (std::size_t i = 0; i < groups.size(); ++i) {
        if (!name.empty()) name += ' ';
        name += std::string(def.group[i]) + "=" + row[groups[i]];
      }
      if (name.empty()) name = y_name;
      auto [it, inserted] = series.try_emplace(name, egta_cli::Series{name, {}});
      if (inserted) order.push_back(name);
      it->second.points.emplace_back(std::stod(row[x]), std::stod(row[y]));
    }
  }
  std::vector<egta_cli::Series> ordered;
  for (const auto& name : order) ordered.push_back(series.at(name));
  egta_cli::PlotSpec spec{title, def.x, def.y_label, def.log_x, def.log_y, def.markers_only};
  return egta_cli::RenderSvg(spec, ordered);
}

std::string PlotPath(const std::string& out, const std::string& name) {
  if (out.empty() || out == "-") return name + ".svg";
  const auto dot = out.find_last_of('.');
  const auto slash = out.find_last_of('/');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
    return out.substr(0, dot) + ".svg";
  return out + ".svg";
}

// ---- game construction for gen-game / gs / psp --------------------------------

struct GameFlags {
  std::string family = "rg";
  int players = 3;
  int k = 3;
  int facilities = 5;
  double alpha = 0.1;
  double u0 = 10.0;
  std::uint64_t seed = 1;
  std::string game_path;

  void Register(CLI::App* app, bool allow_file) {
    app->add_option("--family", family, "rg (uniform random) | rc (random congestion)")
        ->check(CLI::IsMember({"rg", "rc"}))
        ->capture_default_str();
    app->add_option("--players", players, "players")->capture_default_str();
    app->add_option("--k", k, "strategies per player")->capture_default_str();
    app->add_option("--facilities", facilities, "rc: facilities")->capture_default_str();
    app->add_option("--alpha", alpha, "rc: facility inclusion decay")->capture_default_str();
    app->add_option("--u0", u0, "rg: utilities uniform on (-u0/2, u0/2)")->capture_default_str();
    app->add_option("--seed", seed, "seed")->capture_default_str();
    if (allow_file)
      app->add_option("--game", game_path, "game JSON file ('-' for stdin); overrides --family");
  }

  GamePtr Build(std::uint64_t game_seed) const {
    egta_game* raw = nullptr;
    if (!game_path.empty()) {
      Check(egta_game_from_json(ReadFile(game_path).c_str(), &raw));
    } else if (family == "rg") {
      Check(egta_gen_random_game(players, k, u0, game_seed, &raw));
    } else {
      egta_congestion* cg = nullptr;
      Check(egta_gen_congestion_game(players, facilities, k, alpha, game_seed, &cg));
      CongestionPtr owned(cg);
      Check(egta_congestion_expand(cg, &raw));
    }
    return GamePtr(raw);
  }
};

egta_bound ToBound(const std::string& name) {
  return name == "hoeffding" ? EGTA_BOUND_HOEFFDING : EGTA_BOUND_ONE_ERA;
}

SimulatorPtr MakeSimulator(const egta_game* game, double d) {
  egta_simulator* sim = nullptr;
  Check(egta_simulator_noisy(game, d, 0.0, &sim));
  return SimulatorPtr(sim);
}

std::string Help(const char* name) {
  char* text = nullptr;
  Check(egta_experiment_help(name, &text));
  return TakeString(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical game-theoretic analysis with finite-sample guarantees"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(egta_version()));

  // Experiment subcommands: every set flag becomes one key of the params JSON.
  struct Bound {
    ExperimentDef def;
    CLI::App* app;
    std::vector<std::string> values;
    std::string out;
    bool plot = false;
  };
  std::vector<std::unique_ptr<Bound>> bound;
  for (auto& def : Experiments()) {
    auto b = std::make_unique<Bound>();
    b->def = def;
    b->values.resize(def.flags.size());
    b->app = app.add_subcommand(def.name, Help(def.name));
    for (std::size_t i = 0; i < def.flags.size(); ++i) {
      const FlagDef& f = def.flags[i];
      auto* opt = b->app->add_option(f.flag, b->values[i], f.help);
      if (std::string(f.key) == "bound") opt->check(CLI::IsMember({"hoeffding", "1era"}));
    }
    b->app->add_option("--out", b->out, "output path (default stdout)");
    if (def.plot) b->app->add_flag("--plot", b->plot, "also write an SVG next to --out");
    bound.push_back(std::move(b));
  }

  // gen-game
  GameFlags gen_flags;
  bool gen_congestion = false;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-game", "Generate a game and print it as JSON.\n"
                                             "json: {players, strategies, utilities}");
  gen_flags.Register(gen, false);
  gen->add_flag("--congestion", gen_congestion, "rc: print the congestion description");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // gs
  GameFlags gs_flags;
  double gs_d = 5.0, gs_delta = 0.1, gs_c = 0.0;
  std::size_t gs_m = 1000;
  std::string gs_bound = "1era", gs_out;
  auto* gs = app.add_subcommand(
      "gs", "Global sampling on a noisy simulator.\n"
            "json: {bound, m, delta, eps, indices, utilities, one_era?, game}");
  gs_flags.Register(gs, true);
  gs->add_option("--noise-d", gs_d, "uniform noise width d")->capture_default_str();
  gs->add_option("--m", gs_m, "samples per utility")->capture_default_str();
  gs->add_option("--delta", gs_delta, "failure probability")->capture_default_str();
  gs->add_option("--c", gs_c, "utility range (default: simulator range)");
  gs->add_option("--bound", gs_bound, "hoeffding | 1era")
      ->check(CLI::IsMember({"hoeffding", "1era"}))
      ->capture_default_str();
  gs->add_option("--out", gs_out, "output path (default stdout)");

  // psp
  GameFlags psp_flags;
  egta_psp_options psp_opts;
  egta_psp_default_options(&psp_opts);
  double psp_d = 5.0;
  std::string psp_bound = "hoeffding", psp_out;
  bool psp_mixed = false, psp_geometric = false;
  auto* psp = app.add_subcommand(
      "psp", "Progressive sampling with pruning on a noisy simulator.\n"
             "json: {game, radii, pure, eps, delta, iterations, query_cost, trace,\n"
             "       equilibria | surviving_strategies}");
  psp_flags.Register(psp, true);
  psp->add_option("--noise-d", psp_d, "uniform noise width d")->capture_default_str();
  psp->add_option("--m0", psp_opts.m0, "initial sample size")->capture_default_str();
  psp->add_option("--budget", psp_opts.budget, "largest sample size (0: unbounded)")
      ->capture_default_str();
  psp->add_option("--delta", psp_opts.delta, "failure probability")->capture_default_str();
  psp->add_option("--eps", psp_opts.eps, "target error")->capture_default_str();
  psp->add_option("--c", psp_opts.c, "utility range (default: simulator range)");
  psp->add_option("--bound", psp_bound, "hoeffding | 1era")
      ->check(CLI::IsMember({"hoeffding", "1era"}))
      ->capture_default_str();
  psp->add_flag("--mixed", psp_mixed, "prune by rationalizability instead of pure regret");
  psp->add_flag("--geometric", psp_geometric, "failure schedule delta 2^-(t+1)");
  psp->add_option("--out", psp_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    for (const auto& b : bound) {
      if (!b->app->parsed()) continue;
      json params = json::object();
      for (std::size_t i = 0; i < b->def.flags.size(); ++i) {
        const FlagDef& f = b->def.flags[i];
        if (b->app->count(f.flag) == 0) continue;
        params[f.key] = ConvertFlag(b->values[i], f);
      }
      char* text = nullptr;
      Check(egta_run_experiment(b->def.name, params.dump().c_str(), &text));
      const std::string output = TakeString(text);
      WriteOutput(b->out, output);
      if (b->plot && b->def.plot) {
        const std::string path = PlotPath(b->out, b->def.name);
        WriteOutput(path, Plot(b->def.name, *b->def.plot, output));
      }
      return 0;
    }

    if (gen->parsed()) {
      std::string text;
      if (gen_congestion) {
        if (gen_flags.family != "rc") throw CliError("--congestion requires --family rc");
        egta_congestion* cg = nullptr;
        Check(egta_gen_congestion_game(gen_flags.players, gen_flags.facilities, gen_flags.k,
                                       gen_flags.alpha, gen_flags.seed, &cg));
        CongestionPtr owned(cg);
        char* raw = nullptr;
        Check(egta_congestion_to_json(cg, &raw));
        text = TakeString(raw);
      } else {
        GamePtr game = gen_flags.Build(gen_flags.seed);
        char* raw = nullptr;
        Check(egta_game_to_json(game.get(), &raw));
        text = TakeString(raw);
      }
      WriteOutput(gen_out, text + "\n");
      return 0;
    }

    if (gs->parsed()) {
      GamePtr game = gs_flags.Build(gs_flags.seed);
      SimulatorPtr sim = MakeSimulator(game.get(), gs_d);
      char* raw = nullptr;
      Check(egta_gs(sim.get(), gs_m, gs_delta, gs_c, ToBound(gs_bound), gs_flags.seed, &raw));
      WriteOutput(gs_out, TakeString(raw) + "\n");
      return 0;
    }

    if (psp->parsed()) {
      GamePtr game = psp_flags.Build(psp_flags.seed);
      SimulatorPtr sim = MakeSimulator(game.get(), psp_d);
      psp_opts.bound = ToBound(psp_bound);
      psp_opts.pure = psp_mixed ? 0 : 1;
      psp_opts.geometric_failure = psp_geometric ? 1 : 0;
      psp_opts.seed = psp_flags.seed;
      char* raw = nullptr;
      Check(egta_psp(sim.get(), &psp_opts, &raw));
      WriteOutput(psp_out, TakeString(raw) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "egta: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
