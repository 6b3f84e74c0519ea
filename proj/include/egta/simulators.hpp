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

#ifndef EGTA_SIMULATORS_HPP_
#define EGTA_SIMULATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "egta/bounds.hpp"
#include "egta/game.hpp"

namespace egta {

// One draw x from the condition distribution D. A condition fixes the
// utilities of every (player, profile) simultaneously.
struct Condition {
  std::uint64_t seed = 0;
};

// Black-box conditional game: Query(x, p, s) = u_p(s; x). Implementations are
// deterministic, immutable and safe for concurrent queries.
class ConditionalSimulator {
 public:
  virtual ~ConditionalSimulator() = default;

  virtual double Query(Condition x, int player, std::size_t profile) const = 0;
  // Ground truth u(.; D); meant for evaluation harnesses, not for learners.
  virtual const NormalFormGame& base() const = 0;
  // Declared width c and midpoint: every query lies in
  // [center - c/2, center + c/2].
  virtual double range() const = 0;
  virtual double center() const { return 0.0; }
};

// u_p(s; x) = u_p(s) + xi, xi ~ U(-d/2, d/2) i.i.d. per (x, p, s).
class NoisySimulator final : public ConditionalSimulator {
 public:
  // Default interval: [min u - d/2, max u + d/2]. An explicit `range` is
  // centered at 0.
  NoisySimulator(NormalFormGame base, double noise_width,
                 std::optional<double> range = std::nullopt);

  double Query(Condition x, int player, std::size_t profile) const override;
  const NormalFormGame& base() const override { return base_; }
  double range() const override { return range_; }
  double center() const override { return center_; }
  double noise_width() const { return d_; }

 private:
  NormalFormGame base_;
  double d_;
  double range_;
  double center_;
};

// The five factoring maps phi_i(p, s) of a factored-noise game.
enum class FactorKind {
  kGlobal,        // constant; b = 1
  kAgent,         // p; b = |P|
  kOwnStrategy,   // s_p; b = |S|
  kProfile,       // s; b = |S|^|P|
  kAgentProfile,  // (p, s); b = |P||S|^|P|
};

// u_p(s; x) = u_p(s) + sum_i eta_i(phi_i(p, s); x), eta_i uniform in
// [-a_i, a_i] and independent across distinct phi_i values.
class FactoredSimulator final : public ConditionalSimulator {
 public:
  FactoredSimulator(NormalFormGame base, std::vector<double> scales,
                    std::vector<FactorKind> kinds, std::uint64_t seed);

  double Query(Condition x, int player, std::size_t profile) const override;
  const NormalFormGame& base() const override { return base_; }
  double range() const override { return range_; }
  double center() const override { return center_; }

  // ln of the image size of phi_i for this game's shape.
  double LogCardinality(std::size_t factor) const;
  const std::vector<double>& scales() const { return scales_; }

 private:
  NormalFormGame base_;
  std::vector<double> scales_;
  std::vector<FactorKind> kinds_;
  std::uint64_t seed_;
  double range_;
  double center_;
};

// Finite congestion game with linear facility costs f_e(n) = slope_e * n.
// Facilities and strategies are 0-based; each strategy is a sorted,
// nonempty facility subset.
struct CongestionGame {
  int num_players = 0;
  int num_facilities = 0;
  std::vector<std::vector<std::vector<int>>> strategies;  // [player][k] -> facilities
  std::vector<double> slopes;                             // per facility, default 1

  void Validate() const;
  double FacilityCost(int facility, int load) const {
    return slopes[facility] * load;
  }
};

// Uniform random game RG(|P|, k, u0): u_p(s) ~ U(-u0/2, u0/2) i.i.d.
NormalFormGame GenerateRandomGame(int num_players, int num_strategies,
                                  double u0, std::uint64_t seed);

// Random congestion game RC(|P|, |E|, k): |S_p| ~ U[1, k] candidate
// strategies, facility e (1-based) included w.p. alpha^(e-1), duplicates
// dropped.
CongestionGame GenerateCongestionGame(int num_players, int num_facilities,
                                      int max_strategies, double alpha,
                                      std::uint64_t seed);

// Utilities are negated costs, u_p(s) = -sum_{e in s_p} f_e(n_e(s)).
NormalFormGame Expand(const CongestionGame& game);

struct PpaReport {
  double optimum_cost = 0.0;
  double worst_equilibrium_cost = 0.0;
  double ppa = 0.0;
  std::vector<std::size_t> equilibria;  // pure 0-Nash profiles
  std::size_t optimum_profile = 0;
};

class NoEquilibriumError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exact pure price of anarchy by enumeration. Throws NoEquilibriumError if no
// pure Nash equilibrium exists.
PpaReport PriceOfAnarchy(const CongestionGame& game);

// Three players, facilities h_1..h_3 (0..2) and g_1..g_3 (3..5):
// A_p = {h_p, g_p}, B_p = {g_{p+1}, h_{p+1}, h_{p+2}} (mod 3).
CongestionGame PpaExampleGame();

// Empirical game over an index set: per-index sample rows and their means,
// aligned with `indices`.
struct EmpiricalEstimate {
  std::vector<double> means;
  SampleTensor samples;
};
EmpiricalEstimate EmpiricalGame(const ConditionalSimulator& sim,
                                const IndexSet& indices,
                                const std::vector<Condition>& conditions);

// Writes `means` into a copy of `into` at `indices`.
NormalFormGame Scatter(const NormalFormGame& into, const IndexSet& indices,
                       const std::vector<double>& means);

}  // namespace egta

#endif  // EGTA_SIMULATORS_HPP_
