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

#include "egta/egta.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "egta/algorithms.hpp"
#include "egta/bounds.hpp"
#include "egta/experiments.hpp"
#include "egta/game.hpp"
#include "egta/json_io.hpp"
#include "egta/simulators.hpp"

struct egta_game {
  egta::NormalFormGame game;
};

struct egta_congestion {
  egta::CongestionGame game;
};

struct egta_simulator {
  std::unique_ptr<egta::ConditionalSimulator> sim;
};

namespace {

thread_local std::string last_error;

egta_status Fail(egta_status status, const char* message) {
  last_error = message;
  return status;
}

template <typename Fn>
egta_status Guard(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return EGTA_OK;
  } catch (const egta::JsonParseError& e) {
    return Fail(EGTA_ERR_PARSE, e.what());
  } catch (const egta::NoEquilibriumError& e) {
    return Fail(EGTA_ERR_NO_EQUILIBRIUM, e.what());
  } catch (const std::out_of_range& e) {
    return Fail(EGTA_ERR_OUT_OF_RANGE, e.what());
  } catch (const std::domain_error& e) {
    return Fail(EGTA_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return Fail(EGTA_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(EGTA_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(EGTA_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(EGTA_ERR_INTERNAL, "unknown error");
  }
}

void Require(const void* p, const char* what) {
  if (p == nullptr) throw std::invalid_argument(std::string(what) + " is null");
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

egta::StrategyProfile ReadProfile(const egta::NormalFormGame& game, const int* profile) {
  Require(profile, "profile");
  return egta::StrategyProfile(profile, profile + game.num_players());
}

const egta::ConditionalSimulator& Sim(const egta_simulator* sim) {
  Require(sim, "simulator");
  return *sim->sim;
}

}  // namespace

extern "C" {

const char* egta_version(void) { return "1.0.0"; }

const char* egta_status_string(egta_status status) {
  switch (status) {
    case EGTA_OK: return "ok";
    case EGTA_ERR_INVALID_ARGUMENT: return "invalid argument";
    case EGTA_ERR_OUT_OF_RANGE: return "index out of range";
    case EGTA_ERR_DOMAIN: return "parameter outside its domain";
    case EGTA_ERR_PARSE: return "parse error";
    case EGTA_ERR_NO_EQUILIBRIUM: return "no pure equilibrium";
    case EGTA_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case EGTA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* egta_last_error(void) { return last_error.c_str(); }

void egta_string_free(char* s) { std::free(s); }

// ---- games -----------------------------------------------------------------

egta_status egta_game_create(size_t num_players, const int* strategy_counts,
                             const double* utilities, size_t num_utilities,
                             egta_game** out) {
  return Guard([&] {
    Require(out, "out");
    Require(strategy_counts, "strategy_counts");
    if (num_utilities > 0) Require(utilities, "utilities");
    std::vector<int> counts(strategy_counts, strategy_counts + num_players);
    std::vector<double> u(utilities, utilities + num_utilities);
    *out = new egta_game{egta::NormalFormGame(std::move(counts), std::move(u))};
  });
}

egta_status egta_game_from_json(const char* json, egta_game** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new egta_game{egta::GameFromJson(egta::ParseJson(json))};
  });
}

egta_status egta_game_to_json(const egta_game* game, char** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = CopyString(egta::GameToJson(game->game).dump());
  });
}

void egta_game_free(egta_game* game) { delete game; }

egta_status egta_game_num_players(const egta_game* game, size_t* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = static_cast<size_t>(game->game.num_players());
  });
}

egta_status egta_game_num_strategies(const egta_game* game, int player, int* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = game->game.num_strategies(player);
  });
}

egta_status egta_game_num_profiles(const egta_game* game, size_t* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = game->game.num_profiles();
  });
}

egta_status egta_game_size(const egta_game* game, size_t* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::GameSize(game->game);
  });
}

egta_status egta_game_profile_index(const egta_game* game, const int* profile,
                                    size_t* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = game->game.ProfileIndex(ReadProfile(game->game, profile));
  });
}

egta_status egta_game_utility(const egta_game* game, int player, const int* profile,
                              double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::Utility(game->game, player, ReadProfile(game->game, profile));
  });
}

egta_status egta_game_mixed_utility(const egta_game* game, const double* probabilities,
                                    size_t num_probabilities, double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(probabilities, "probabilities");
    Require(out, "out");
    const auto& g = game->game;
    egta::MixedProfile mixed(g.num_players());
    size_t offset = 0;
    for (int p = 0; p < g.num_players(); ++p) {
      const auto k = static_cast<size_t>(g.num_strategies(p));
      if (offset + k > num_probabilities)
        throw std::invalid_argument("too few probabilities for the game's strategies");
      mixed[p].assign(probabilities + offset, probabilities + offset + k);
      offset += k;
    }
    if (offset != num_probabilities)
      throw std::invalid_argument("too many probabilities for the game's strategies");
    const auto values = egta::MixedUtility(g, mixed);
    std::copy(values.begin(), values.end(), out);
  });
}

egta_status egta_game_pure_regret(const egta_game* game, int player, const int* profile,
                                  double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::PureRegret(game->game, player, ReadProfile(game->game, profile));
  });
}

egta_status egta_game_pure_eps_nash(const egta_game* game, double eps, size_t* profiles,
                                    size_t capacity, size_t* count) {
  egta_status status = EGTA_OK;
  const egta_status guarded = Guard([&] {
    Require(game, "game");
    Require(count, "count");
    const auto nash = egta::PureEpsNash(game->game, eps);
    *count = nash.size();
    if (nash.size() > capacity) {
      status = EGTA_ERR_BUFFER_TOO_SMALL;
      return;
    }
    if (!nash.empty()) Require(profiles, "profiles");
    std::copy(nash.begin(), nash.end(), profiles);
  });
  if (guarded != EGTA_OK) return guarded;
  if (status != EGTA_OK) return Fail(status, "profile buffer too small");
  return EGTA_OK;
}

egta_status egta_game_eps_dominates(const egta_game* game, int player, int strategy,
                                    int other, double eps, int* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::EpsDominates(game->game, player, strategy, other, eps) ? 1 : 0;
  });
}

egta_status egta_game_rationalizable(const egta_game* game, double eps, int* mask,
                                     size_t mask_len) {
  return Guard([&] {
    Require(game, "game");
    Require(mask, "mask");
    const auto& g = game->game;
    size_t total = 0;
    for (int k : g.strategy_counts()) total += static_cast<size_t>(k);
    if (mask_len != total)
      throw std::invalid_argument("mask length must equal the total strategy count");
    const auto alive = egta::Rationalizable(g, eps);
    std::fill(mask, mask + mask_len, 0);
    size_t offset = 0;
    for (int p = 0; p < g.num_players(); ++p) {
      for (int s : alive[p]) mask[offset + static_cast<size_t>(s)] = 1;
      offset += static_cast<size_t>(g.num_strategies(p));
    }
  });
}

egta_status egta_game_welfare(const egta_game* game, const int* profile, double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::Welfare(game->game, ReadProfile(game->game, profile));
  });
}

egta_status egta_game_pessimal_value(const egta_game* game, int player, int strategy,
                                     double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::PessimalValue(game->game, player, strategy);
  });
}

egta_status egta_game_maximin_value(const egta_game* game, int player, double* out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = egta::MaximinValue(game->game, player);
  });
}

egta_status egta_game_linf_distance(const egta_game* a, const egta_game* b, double* out) {
  return Guard([&] {
    Require(a, "a");
    Require(b, "b");
    Require(out, "out");
    *out = egta::LinfDistance(a->game, b->game);
  });
}

egta_status egta_game_check_containment(const egta_game* a, const egta_game* b, double eps,
                                        int* out) {
  return Guard([&] {
    Require(a, "a");
    Require(b, "b");
    Require(out, "out");
    *out = egta::CheckContainment(a->game, b->game, eps) ? 1 : 0;
  });
}

// ---- generators --------------------------------------------------------------

egta_status egta_gen_random_game(int num_players, int num_strategies, double u0,
                                 uint64_t seed, egta_game** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new egta_game{egta::GenerateRandomGame(num_players, num_strategies, u0, seed)};
  });
}

egta_status egta_gen_congestion_game(int num_players, int num_facilities,
                                     int max_strategies, double alpha, uint64_t seed,
                                     egta_congestion** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new egta_congestion{egta::GenerateCongestionGame(
        num_players, num_facilities, max_strategies, alpha, seed)};
  });
}

egta_status egta_congestion_ppa_example(egta_congestion** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new egta_congestion{egta::PpaExampleGame()};
  });
}

egta_status egta_congestion_from_json(const char* json, egta_congestion** out) {
  return Guard([&] {
    Require(json, "json");
    Require(out, "out");
    *out = new egta_congestion{egta::CongestionFromJson(egta::ParseJson(json))};
  });
}

egta_status egta_congestion_to_json(const egta_congestion* game, char** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = CopyString(egta::CongestionToJson(game->game).dump());
  });
}

void egta_congestion_free(egta_congestion* game) { delete game; }

egta_status egta_congestion_expand(const egta_congestion* game, egta_game** out) {
  return Guard([&] {
    Require(game, "game");
    Require(out, "out");
    *out = new egta_game{egta::Expand(game->game)};
  });
}

egta_status egta_congestion_ppa(const egta_congestion* game, double* optimum_cost,
                                double* worst_equilibrium_cost, double* ppa,
                                size_t* num_equilibria) {
  return Guard([&] {
    Require(game, "game");
    const auto report = egta::PriceOfAnarchy(game->game);
    if (optimum_cost) *optimum_cost = report.optimum_cost;
    if (worst_equilibrium_cost) *worst_equilibrium_cost = report.worst_equilibrium_cost;
    if (ppa) *ppa = report.ppa;
    if (num_equilibria) *num_equilibria = report.equilibria.size();
  });
}

// ---- simulators --------------------------------------------------------------

egta_status egta_simulator_noisy(const egta_game* base, double noise_width, double range,
                                 egta_simulator** out) {
  return Guard([&] {
    Require(base, "base");
    Require(out, "out");
    std::optional<double> declared;
    if (range > 0.0) declared = range;
    *out = new egta_simulator{
        std::make_unique<egta::NoisySimulator>(base->game, noise_width, declared)};
  });
}

egta_status egta_simulator_factored(const egta_game* base, const double* scales,
                                    const int* kinds, size_t num_factors, uint64_t seed,
                                    egta_simulator** out) {
  return Guard([&] {
    Require(base, "base");
    Require(out, "out");
    if (num_factors > 0) {
      Require(scales, "scales");
      Require(kinds, "kinds");
    }
    std::vector<egta::FactorKind> factor_kinds;
    for (size_t i = 0; i < num_factors; ++i) {
      if (kinds[i] < EGTA_FACTOR_GLOBAL || kinds[i] > EGTA_FACTOR_AGENT_PROFILE)
        throw std::invalid_argument("unknown factor kind");
      factor_kinds.push_back(static_cast<egta::FactorKind>(kinds[i]));
    }
    *out = new egta_simulator{std::make_unique<egta::FactoredSimulator>(
        base->game, std::vector<double>(scales, scales + num_factors),
        std::move(factor_kinds), seed)};
  });
}

void egta_simulator_free(egta_simulator* sim) { delete sim; }

egta_status egta_simulator_query(const egta_simulator* sim, uint64_t condition, int player,
                                 size_t profile, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = Sim(sim).Query(egta::Condition{condition}, player, profile);
  });
}

egta_status egta_simulator_range(const egta_simulator* sim, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = Sim(sim).range();
  });
}

egta_status egta_simulator_center(const egta_simulator* sim, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = Sim(sim).center();
  });
}

egta_status egta_simulator_base(const egta_simulator* sim, egta_game** out) {
  return Guard([&] {
    Require(out, "out");
    *out = new egta_game{Sim(sim).base()};
  });
}

// ---- algorithms --------------------------------------------------------------

egta_status egta_gs(const egta_simulator* sim, size_t m, double delta, double c,
                    egta_bound bound, uint64_t seed, char** out_json) {
  return Guard([&] {
    Require(out_json, "out_json");
    const auto& s = Sim(sim);
    const auto indices = egta::IndexSet::Full(s.base());
    const auto result = egta::GlobalSampling(
        s, indices, m, delta, c > 0.0 ? c : s.range(),
        bound == EGTA_BOUND_ONE_ERA ? egta::BoundType::kOneEra : egta::BoundType::kHoeffding,
        seed);
    *out_json = CopyString(egta::GsResultToJson(result, s.base()).dump());
  });
}

void egta_psp_default_options(egta_psp_options* options) {
  if (options == nullptr) return;
  options->m0 = 100;
  options->budget = 6400;
  options->delta = 0.1;
  options->geometric_failure = 0;
  options->c = 0.0;
  options->bound = EGTA_BOUND_HOEFFDING;
  options->pure = 1;
  options->eps = 0.0;
  options->seed = 1;
}

egta_status egta_psp(const egta_simulator* sim, const egta_psp_options* options,
                     char** out_json) {
  return Guard([&] {
    Require(options, "options");
    Require(out_json, "out_json");
    const auto& s = Sim(sim);
    const auto sampling = options->budget == 0
                              ? egta::SamplingSchedule::InfiniteDoubling(options->m0)
                              : egta::SamplingSchedule::FiniteDoubling(options->m0,
                                                                       options->budget);
    egta::FailureSchedule failure = egta::FailureSchedule::GeometricHalving(options->delta);
    if (!options->geometric_failure) {
      const auto steps = sampling.length();
      if (!steps)
        throw std::invalid_argument("a uniform failure split needs a finite budget");
      if (*steps == 0) throw std::invalid_argument("sampling budget admits no iteration");
      failure = egta::FailureSchedule::UniformSplit(options->delta, *steps);
    }
    const auto result = egta::ProgressiveSampling(
        s, sampling, failure, options->c > 0.0 ? options->c : s.range(),
        options->bound == EGTA_BOUND_ONE_ERA ? egta::BoundType::kOneEra
                                             : egta::BoundType::kHoeffding,
        options->pure != 0, options->eps, options->seed);
    *out_json = CopyString(egta::PspResultToJson(result).dump());
  });
}

// ---- bounds ------------------------------------------------------------------

egta_status egta_hoeffding_eps(double c, double num_indices, double m, double delta,
                               double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = egta::HoeffdingEps(c, num_indices, m, delta);
  });
}

egta_status egta_hoeffding_eps_log(double c, double log_num_indices, double m,
                                   double delta, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = egta::HoeffdingEpsLog(c, log_num_indices, m, delta);
  });
}

egta_status egta_one_era(const double* samples, size_t num_indices, size_t m,
                         const int* signs, double* out) {
  return Guard([&] {
    Require(samples, "samples");
    Require(signs, "signs");
    Require(out, "out");
    egta::SampleTensor tensor(num_indices, m,
                              std::vector<double>(samples, samples + num_indices * m));
    *out = egta::OneEra(tensor, egta::RademacherSigns(std::vector<int>(signs, signs + m)));
  });
}

egta_status egta_era_eps(double one_era, double c, double m, double delta, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = egta::EraEps(one_era, c, m, delta);
  });
}

egta_status egta_ra_eps_upper(double c, double num_indices, double m, double delta,
                              double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = egta::RaEpsUpper(c, num_indices, m, delta);
  });
}

egta_status egta_crossover_size(double delta, double* out) {
  return Guard([&] {
    Require(out, "out");
    *out = egta::CrossoverSize(delta);
  });
}

egta_status egta_factored_ra_bound(double a0, const double* scales,
                                   const double* log_cardinalities, size_t num_factors,
                                   double m, double* out) {
  return Guard([&] {
    Require(out, "out");
    if (num_factors > 0) {
      Require(scales, "scales");
      Require(log_cardinalities, "log_cardinalities");
    }
    *out = egta::FactoredRaBoundLog(a0, {scales, num_factors},
                                    {log_cardinalities, num_factors}, m);
  });
}

egta_status egta_noise_scaling_ra_bound(double a, const double* breakpoints,
                                        const double* log_counts, size_t num_intervals,
                                        double m, double* out) {
  return Guard([&] {
    Require(breakpoints, "breakpoints");
    Require(out, "out");
    if (num_intervals > 0) Require(log_counts, "log_counts");
    egta::NoiseProfile profile{a,
                               std::vector<double>(breakpoints, breakpoints + num_intervals + 1),
                               std::vector<double>(log_counts, log_counts + num_intervals)};
    *out = egta::NoiseScalingRaBound(profile, m);
  });
}

// ---- experiments -------------------------------------------------------------

egta_status egta_experiment_names(char** out_json) {
  return Guard([&] {
    Require(out_json, "out_json");
    *out_json = CopyString(nlohmann::json(egta::ExperimentNames()).dump());
  });
}

egta_status egta_experiment_help(const char* name, char** out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    *out = CopyString(egta::ExperimentHelp(name));
  });
}

egta_status egta_run_experiment(const char* name, const char* params_json, char** out) {
  return Guard([&] {
    Require(name, "name");
    Require(out, "out");
    const nlohmann::json params =
        params_json == nullptr ? nlohmann::json() : egta::ParseJson(params_json);
    *out = CopyString(egta::RunExperiment(name, params).text);
  });
}

}  // extern "C"
