/*
 * Copyright 2026 The EGTA Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libegta: learning empirical games from a black-box
 * simulator with uniform error guarantees.
 *
 * Conventions:
 *  - Every function returning egta_status writes its results through out
 *    pointers only on EGTA_OK. On failure egta_last_error() holds a message
 *    for the calling thread until its next call into the library.
 *  - Handles are opaque and immutable once created; they may be shared
 *    across threads. Free each with its matching *_free function (NULL is
 *    accepted).
 *  - Strings returned through char** are NUL-terminated, heap-allocated and
 *    must be released with egta_string_free().
 *  - Profiles are arrays of 0-based strategy indices, one per player.
 *    Profile indices linearize them row-major (last player fastest).
 */

#ifndef EGTA_EGTA_H_
#define EGTA_EGTA_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  ifdef EGTA_BUILDING_LIBRARY
#    define EGTA_API __declspec(dllexport)
#  else
#    define EGTA_API __declspec(dllimport)
#  endif
#elif defined(__GNUC__) || defined(__clang__)
#  define EGTA_API __attribute__((visibility("default")))
#else
#  define EGTA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum egta_status {
  EGTA_OK = 0,
  EGTA_ERR_INVALID_ARGUMENT = 1, /* bad shape, null pointer, schema violation */
  EGTA_ERR_OUT_OF_RANGE = 2,     /* player/strategy/profile index */
  EGTA_ERR_DOMAIN = 3,           /* bound parameters outside their domain */
  EGTA_ERR_PARSE = 4,            /* malformed JSON */
  EGTA_ERR_NO_EQUILIBRIUM = 5,
  EGTA_ERR_BUFFER_TOO_SMALL = 6, /* *count holds the required size */
  EGTA_ERR_INTERNAL = 7
} egta_status;

typedef enum egta_bound {
  EGTA_BOUND_HOEFFDING = 0,
  EGTA_BOUND_ONE_ERA = 1
} egta_bound;

typedef enum egta_factor_kind {
  EGTA_FACTOR_GLOBAL = 0,
  EGTA_FACTOR_AGENT = 1,
  EGTA_FACTOR_OWN_STRATEGY = 2,
  EGTA_FACTOR_PROFILE = 3,
  EGTA_FACTOR_AGENT_PROFILE = 4
} egta_factor_kind;

typedef struct egta_game egta_game;
typedef struct egta_congestion egta_congestion;
typedef struct egta_simulator egta_simulator;

EGTA_API const char* egta_version(void);
EGTA_API const char* egta_status_string(egta_status status);
EGTA_API const char* egta_last_error(void);
EGTA_API void egta_string_free(char* s);

/* ---- Normal-form games -------------------------------------------------- */

/* utilities: num_players * prod(strategy_counts) entries, player-major. */
EGTA_API egta_status egta_game_create(size_t num_players, const int* strategy_counts,
                                      const double* utilities, size_t num_utilities,
                                      egta_game** out);
EGTA_API egta_status egta_game_from_json(const char* json, egta_game** out);
EGTA_API egta_status egta_game_to_json(const egta_game* game, char** out);
EGTA_API void egta_game_free(egta_game* game);

EGTA_API egta_status egta_game_num_players(const egta_game* game, size_t* out);
EGTA_API egta_status egta_game_num_strategies(const egta_game* game, int player, int* out);
EGTA_API egta_status egta_game_num_profiles(const egta_game* game, size_t* out);
/* |P| * |S|, the number of utility entries. */
EGTA_API egta_status egta_game_size(const egta_game* game, size_t* out);
EGTA_API egta_status egta_game_profile_index(const egta_game* game, const int* profile,
                                             size_t* out);

EGTA_API egta_status egta_game_utility(const egta_game* game, int player,
                                       const int* profile, double* out);
/* probabilities: per-player distributions concatenated (sum of strategy
 * counts entries). out: one expected utility per player. */
EGTA_API egta_status egta_game_mixed_utility(const egta_game* game,
                                             const double* probabilities,
                                             size_t num_probabilities, double* out);
EGTA_API egta_status egta_game_pure_regret(const egta_game* game, int player,
                                           const int* profile, double* out);
/* Writes ascending profile indices of the pure eps-Nash set. */
EGTA_API egta_status egta_game_pure_eps_nash(const egta_game* game, double eps,
                                             size_t* profiles, size_t capacity,
                                             size_t* count);
EGTA_API egta_status egta_game_eps_dominates(const egta_game* game, int player,
                                             int strategy, int other, double eps,
                                             int* out);
/* mask: sum of strategy counts entries, player-major; 1 = survives. */
EGTA_API egta_status egta_game_rationalizable(const egta_game* game, double eps,
                                              int* mask, size_t mask_len);
EGTA_API egta_status egta_game_welfare(const egta_game* game, const int* profile,
                                       double* out);
EGTA_API egta_status egta_game_pessimal_value(const egta_game* game, int player,
                                              int strategy, double* out);
EGTA_API egta_status egta_game_maximin_value(const egta_game* game, int player,
                                             double* out);
EGTA_API egta_status egta_game_linf_distance(const egta_game* a, const egta_game* b,
                                             double* out);
EGTA_API egta_status egta_game_check_containment(const egta_game* a, const egta_game* b,
                                                 double eps, int* out);

/* ---- Generators and congestion games ------------------------------------ */

EGTA_API egta_status egta_gen_random_game(int num_players, int num_strategies, double u0,
                                          uint64_t seed, egta_game** out);
EGTA_API egta_status egta_gen_congestion_game(int num_players, int num_facilities,
                                              int max_strategies, double alpha,
                                              uint64_t seed, egta_congestion** out);
EGTA_API egta_status egta_congestion_ppa_example(egta_congestion** out);
EGTA_API egta_status egta_congestion_from_json(const char* json, egta_congestion** out);
EGTA_API egta_status egta_congestion_to_json(const egta_congestion* game, char** out);
EGTA_API void egta_congestion_free(egta_congestion* game);
/* Utilities are negated costs. */
EGTA_API egta_status egta_congestion_expand(const egta_congestion* game, egta_game** out);
EGTA_API egta_status egta_congestion_ppa(const egta_congestion* game, double* optimum_cost,
                                         double* worst_equilibrium_cost, double* ppa,
                                         size_t* num_equilibria);

/* ---- Simulators --------------------------------------------------------- */

/* Additive U(-d/2, d/2) noise. range <= 0 selects [min u - d/2, max u + d/2];
 * an explicit range is centered at 0. */
EGTA_API egta_status egta_simulator_noisy(const egta_game* base, double noise_width,
                                          double range, egta_simulator** out);
EGTA_API egta_status egta_simulator_factored(const egta_game* base, const double* scales,
                                             const int* kinds, size_t num_factors,
                                             uint64_t seed, egta_simulator** out);
EGTA_API void egta_simulator_free(egta_simulator* sim);
EGTA_API egta_status egta_simulator_query(const egta_simulator* sim, uint64_t condition,
                                          int player, size_t profile, double* out);
EGTA_API egta_status egta_simulator_range(const egta_simulator* sim, double* out);
/* Midpoint of the declared utility interval. */
EGTA_API egta_status egta_simulator_center(const egta_simulator* sim, double* out);
/* Copy of the ground-truth game. */
EGTA_API egta_status egta_simulator_base(const egta_simulator* sim, egta_game** out);

/* ---- Learning algorithms ------------------------------------------------ */

/* Global sampling over every (player, profile). c <= 0 selects the
 * simulator's declared range. Result JSON: {bound, m, delta, eps, indices,
 * utilities, one_era?, game}. */
EGTA_API egta_status egta_gs(const egta_simulator* sim, size_t m, double delta, double c,
                             egta_bound bound, uint64_t seed, char** out_json);

typedef struct egta_psp_options {
  size_t m0;             /* first sample size, doubled each iteration */
  size_t budget;         /* largest sample size; 0 = unbounded */
  double delta;          /* total failure probability */
  int geometric_failure; /* 1: delta 2^-t; 0: delta / iterations */
  double c;              /* <= 0: simulator range */
  egta_bound bound;
  int pure;
  double eps;            /* early-termination threshold */
  uint64_t seed;
} egta_psp_options;

EGTA_API void egta_psp_default_options(egta_psp_options* options);
/* Result JSON: {game, radii, pure, eps, delta, iterations, query_cost, trace,
 * equilibria | surviving_strategies}. */
EGTA_API egta_status egta_psp(const egta_simulator* sim, const egta_psp_options* options,
                              char** out_json);

/* ---- Bounds ------------------------------------------------------------- */

EGTA_API egta_status egta_hoeffding_eps(double c, double num_indices, double m,
                                        double delta, double* out);
EGTA_API egta_status egta_hoeffding_eps_log(double c, double log_num_indices, double m,
                                            double delta, double* out);
/* samples: num_indices rows of m values; signs: m entries of +-1. */
EGTA_API egta_status egta_one_era(const double* samples, size_t num_indices, size_t m,
                                  const int* signs, double* out);
EGTA_API egta_status egta_era_eps(double one_era, double c, double m, double delta,
                                  double* out);
EGTA_API egta_status egta_ra_eps_upper(double c, double num_indices, double m,
                                       double delta, double* out);
EGTA_API egta_status egta_crossover_size(double delta, double* out);
/* log_cardinalities[i] = ln(b_i). */
EGTA_API egta_status egta_factored_ra_bound(double a0, const double* scales,
                                            const double* log_cardinalities,
                                            size_t num_factors, double m, double* out);
/* breakpoints: num_intervals + 1 values from 0 to c; log_counts: ln F per
 * interval (-INFINITY for empty). */
EGTA_API egta_status egta_noise_scaling_ra_bound(double a, const double* breakpoints,
                                                 const double* log_counts,
                                                 size_t num_intervals, double m,
                                                 double* out);

/* ---- Experiments -------------------------------------------------------- */

/* JSON array of experiment names. */
EGTA_API egta_status egta_experiment_names(char** out_json);
EGTA_API egta_status egta_experiment_help(const char* name, char** out);
/* params_json: JSON object or NULL for defaults. Output is CSV (or a text
 * report for "ppa-demo"). */
EGTA_API egta_status egta_run_experiment(const char* name, const char* params_json,
                                         char** out);

#ifdef __cplusplus
}
#endif

#endif /* EGTA_EGTA_H_ */
