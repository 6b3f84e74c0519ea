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

#ifndef EGTA_ALGORITHMS_HPP_
#define EGTA_ALGORITHMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "egta/game.hpp"
#include "egta/simulators.hpp"

namespace egta {

enum class BoundType { kHoeffding, kOneEra };

std::string_view BoundName(BoundType bound);
// Accepts "hoeffding" and "1era"; throws std::invalid_argument otherwise.
BoundType ParseBound(std::string_view name);

// Strictly increasing sample sizes M_1 < M_2 < ...
class SamplingSchedule {
 public:
  // m0, 2 m0, 4 m0, ... while M_t <= budget.
  static SamplingSchedule FiniteDoubling(std::size_t m0, std::size_t budget);
  static SamplingSchedule InfiniteDoubling(std::size_t m0);
  static SamplingSchedule Explicit(std::vector<std::size_t> sizes);

  // nullopt for an infinite schedule.
  std::optional<std::size_t> length() const;
  // 0-based.
  std::size_t at(std::size_t t) const;

 private:
  std::size_t m0_ = 0;
  bool infinite_ = false;
  std::vector<std::size_t> sizes_;
};

// Per-iteration failure probabilities delta_t with sum <= delta < 1.
class FailureSchedule {
 public:
  // delta / T for T iterations.
  static FailureSchedule UniformSplit(double delta, std::size_t iterations);
  // delta 2^-t for t = 1, 2, ...
  static FailureSchedule GeometricHalving(double delta);

  std::optional<std::size_t> length() const;
  double at(std::size_t t) const;  // 0-based
  double total() const { return delta_; }

 private:
  double delta_ = 0.0;
  std::size_t iterations_ = 0;  // 0 for the geometric schedule
};

struct GsResult {
  IndexSet indices;
  std::vector<double> utilities;  // aligned with `indices`
  double eps = 0.0;
  std::size_t m = 0;
  double delta = 0.0;
  BoundType bound = BoundType::kHoeffding;
  double one_era = 0.0;  // only meaningful for kOneEra
};

// Global sampling: draws m conditions once (derived from `seed`), estimates
// every utility in `indices` from them and certifies an additive error that
// holds uniformly with probability >= 1 - delta.
GsResult GlobalSampling(const ConditionalSimulator& sim, const IndexSet& indices,
                        std::size_t m, double delta, double c, BoundType bound,
                        std::uint64_t seed);

struct PspIteration {
  std::size_t t = 0;  // 1-based
  std::size_t m = 0;
  std::size_t num_indices = 0;
  double eps = 0.0;
  double delta = 0.0;
};

struct PspResult {
  NormalFormGame utilities;   // u~ over all of P x S
  std::vector<double> radii;  // eps~, flat like utilities
  bool pure = true;
  // Pure mode: profiles in Nash_{2 eps}(u~) whose indices all survived.
  std::vector<std::size_t> equilibria;
  // Mixed mode: 2 eps-rationalizable strategies of u~ (the pruned game).
  StrategySets surviving_strategies;
  double eps = 0.0;
  double delta = 0.0;  // sum of consumed delta_t
  std::vector<PspIteration> trace;
  IndexSet final_indices;
};

// Progressive sampling with pruning. Runs GS on a shrinking index set until
// eps_hat <= eps_target or the schedule ends.
PspResult ProgressiveSampling(const ConditionalSimulator& sim,
                              const SamplingSchedule& sampling,
                              const FailureSchedule& failure, double c,
                              BoundType bound, bool pure, double eps_target,
                              std::uint64_t seed);

// Keeps (p, s) in `indices` whose regret in `estimates`, over deviations that
// are themselves in `indices`, is <= 2 eps_hat.
IndexSet PrunePure(const NormalFormGame& estimates, const IndexSet& indices,
                   double eps_hat);

// Keeps (p, s) in `indices` whose every coordinate is 2 eps_hat-rationalizable
// in `estimates`, restricted to the strategies still present in `indices`.
IndexSet PruneMixed(const NormalFormGame& estimates, const IndexSet& indices,
                    double eps_hat);

// Per-player strategies appearing in any profile of `indices`.
StrategySets PresentStrategies(const NormalFormGame& shape,
                               const IndexSet& indices);

// Simulator utility evaluations, sum_t M_t |I_t|.
std::uint64_t QueryCost(const std::vector<PspIteration>& trace);

}  // namespace egta

#endif  // EGTA_ALGORITHMS_HPP_
