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

#include "egta/simulators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>
#include <utility>

#include "egta/rng.hpp"

namespace egta {
namespace {

// Discriminators keeping the noise streams of different models apart.
constexpr std::uint64_t kAdditiveNoise = 0x6e6f697365ULL;
constexpr std::uint64_t kFactorNoise = 0x666163746f72ULL;

// [min, max] of the base utilities.
std::pair<double, double> Extent(const NormalFormGame& game) {
  const auto [lo, hi] = std::minmax_element(game.utilities().begin(), game.utilities().end());
  return {*lo, *hi};
}

}  // namespace

NoisySimulator::NoisySimulator(NormalFormGame base, double noise_width,
                               std::optional<double> range)
    : base_(std::move(base)), d_(noise_width) {
  if (!(d_ >= 0.0) || !std::isfinite(d_))
    throw std::invalid_argument("noise width must be >= 0");
  if (range) {
    range_ = *range;
    center_ = 0.0;
  } else {
    const auto [lo, hi] = Extent(base_);
    range_ = hi - lo + d_;
    center_ = 0.5 * (lo + hi);
  }
  if (!(range_ > 0.0)) range_ = 1.0;  // constant base without noise
}

double NoisySimulator::Query(Condition x, int player, std::size_t profile) const {
  const double u = base_.utility(player, profile);
  if (d_ == 0.0) return u;
  const std::uint64_t bits =
      Hash({x.seed, kAdditiveNoise, static_cast<std::uint64_t>(player), profile});
  return u + d_ * (OpenUnit(bits) - 0.5);
}

FactoredSimulator::FactoredSimulator(NormalFormGame base,
                                     std::vector<double> scales,
                                     std::vector<FactorKind> kinds,
                                     std::uint64_t seed)
    : base_(std::move(base)),
      scales_(std::move(scales)),
      kinds_(std::move(kinds)),
      seed_(seed) {
  if (scales_.size() != kinds_.size())
    throw std::invalid_argument("one factor kind per scale");
  double total = 0.0;
  for (double a : scales_) {
    if (!(a >= 0.0) || !std::isfinite(a))
      throw std::invalid_argument("factor scales must be >= 0");
    total += a;
  }
  const auto [lo, hi] = Extent(base_);
  range_ = hi - lo + 2.0 * total;
  center_ = 0.5 * (lo + hi);
  if (!(range_ > 0.0)) range_ = 1.0;
}

double FactoredSimulator::Query(Condition x, int player,
                                std::size_t profile) const {
  double u = base_.utility(player, profile);
  for (std::size_t i = 0; i < kinds_.size(); ++i) {
    if (scales_[i] == 0.0) continue;
    std::uint64_t key = 0;
    switch (kinds_[i]) {
      case FactorKind::kGlobal:
        key = 0;
        break;
      case FactorKind::kAgent:
        key = static_cast<std::uint64_t>(player);
        break;
      case FactorKind::kOwnStrategy:
        key = static_cast<std::uint64_t>(base_.StrategyOf(profile, player));
        break;
      case FactorKind::kProfile:
        key = profile;
        break;
      case FactorKind::kAgentProfile:
        key = base_.FlatIndex({player, profile});
        break;
    }
    const std::uint64_t bits = Hash({x.seed, kFactorNoise, seed_, i, key});
    u += scales_[i] * (2.0 * OpenUnit(bits) - 1.0);
  }
  return u;
}

double FactoredSimulator::LogCardinality(std::size_t factor) const {
  const double log_players = std::log(static_cast<double>(base_.num_players()));
  int widest = 0;
  for (int k : base_.strategy_counts()) widest = std::max(widest, k);
  const double log_profiles = std::log(static_cast<double>(base_.num_profiles()));
  switch (kinds_.at(factor)) {
    case FactorKind::kGlobal:
      return 0.0;
    case FactorKind::kAgent:
      return log_players;
    case FactorKind::kOwnStrategy:
      return std::log(static_cast<double>(widest));
    case FactorKind::kProfile:
      return log_profiles;
    case FactorKind::kAgentProfile:
      return log_players + log_profiles;
  }
  return 0.0;
}

void CongestionGame::Validate() const {
  if (num_players <= 0) throw std::invalid_argument("congestion game needs players");
  if (num_facilities <= 0)
    throw std::invalid_argument("congestion game needs facilities");
  if (strategies.size() != static_cast<std::size_t>(num_players))
    throw std::invalid_argument("one strategy list per player");
  if (slopes.size() != static_cast<std::size_t>(num_facilities))
    throw std::invalid_argument("one cost slope per facility");
  for (const auto& list : strategies) {
    if (list.empty()) throw std::invalid_argument("player without strategies");
    for (const auto& facilities : list) {
      if (facilities.empty()) throw std::invalid_argument("empty strategy");
      for (int e : facilities) {
        if (e < 0 || e >= num_facilities)
          throw std::invalid_argument("facility index out of range");
      }
      if (std::set<int>(facilities.begin(), facilities.end()).size() !=
          facilities.size())
        throw std::invalid_argument("strategy repeats a facility");
    }
  }
}

NormalFormGame GenerateRandomGame(int num_players, int num_strategies,
                                  double u0, std::uint64_t seed) {
  if (num_players < 1 || num_strategies < 1)
    throw std::invalid_argument("RG needs >= 1 player and strategy");
  if (!(u0 > 0.0)) throw std::invalid_argument("u0 must be positive");
  auto game = NormalFormGame::Zeros(std::vector<int>(num_players, num_strategies));
  std::vector<double> u(game.size());
  CounterRng rng(seed);
  for (double& x : u) x = rng.Uniform(-u0 / 2.0, u0 / 2.0);
  return game.WithUtilities(std::move(u));
}

CongestionGame GenerateCongestionGame(int num_players, int num_facilities,
                                      int max_strategies, double alpha,
                                      std::uint64_t seed) {
  if (num_players < 1 || num_facilities < 1)
    throw std::invalid_argument("RC needs >= 1 player and facility");
  if (max_strategies < 1 ||
      (num_facilities < 63 &&
       max_strategies > (std::int64_t{1} << num_facilities) - 1))
    throw std::invalid_argument("RC needs 1 <= k <= 2^|E| - 1");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("alpha must lie in (0, 1)");
  CongestionGame game;
  game.num_players = num_players;
  game.num_facilities = num_facilities;
  game.slopes.assign(num_facilities, 1.0);
  CounterRng rng(seed);
  for (int p = 0; p < num_players; ++p) {
    const auto draws = rng.UniformInt(1, max_strategies);
    std::vector<std::vector<int>> list;
    for (std::int64_t j = 0; j < draws; ++j) {
      std::vector<int> facilities{0};
      double inclusion = 1.0;
      for (int e = 1; e < num_facilities; ++e) {
        inclusion *= alpha;
        if (rng.Bernoulli(inclusion)) facilities.push_back(e);
      }
      if (std::find(list.begin(), list.end(), facilities) == list.end())
        list.push_back(std::move(facilities));
    }
    game.strategies.push_back(std::move(list));
  }
  return game;
}

NormalFormGame Expand(const CongestionGame& game) {
  game.Validate();
  std::vector<int> counts;
  for (const auto& list : game.strategies)
    counts.push_back(static_cast<int>(list.size()));
  auto shape = NormalFormGame::Zeros(counts);
  std::vector<double> u(shape.size());
  std::vector<int> load(game.num_facilities);
  for (std::size_t s = 0; s < shape.num_profiles(); ++s) {
    std::fill(load.begin(), load.end(), 0);
    for (int p = 0; p < game.num_players; ++p) {
      for (int e : game.strategies[p][shape.StrategyOf(s, p)]) ++load[e];
    }
    for (int p = 0; p < game.num_players; ++p) {
      double cost = 0.0;
      for (int e : game.strategies[p][shape.StrategyOf(s, p)])
        cost += game.FacilityCost(e, load[e]);
      u[shape.FlatIndex({p, s})] = -cost;
    }
  }
  return shape.WithUtilities(std::move(u));
}

PpaReport PriceOfAnarchy(const CongestionGame& game) {
  const NormalFormGame expanded = Expand(game);
  PpaReport report;
  report.equilibria = PureEpsNash(expanded, 0.0);
  if (report.equilibria.empty())
    throw NoEquilibriumError("congestion game has no pure Nash equilibrium");
  report.optimum_cost = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < expanded.num_profiles(); ++s) {
    const double cost = -Welfare(expanded, s);
    if (cost < report.optimum_cost) {
      report.optimum_cost = cost;
      report.optimum_profile = s;
    }
  }
  report.worst_equilibrium_cost = -std::numeric_limits<double>::infinity();
  for (std::size_t s : report.equilibria) {
    report.worst_equilibrium_cost =
        std::max(report.worst_equilibrium_cost, -Welfare(expanded, s));
  }
  report.ppa = report.worst_equilibrium_cost / report.optimum_cost;
  return report;
}

CongestionGame PpaExampleGame() {
  CongestionGame game;
  game.num_players = 3;
  game.num_facilities = 6;
  game.slopes.assign(6, 1.0);
  auto h = [](int p) { return p % 3; };
  auto g = [](int p) { return 3 + p % 3; };
  for (int p = 0; p < 3; ++p) {
    std::vector<int> a{h(p), g(p)};
    std::vector<int> b{g(p + 1), h(p + 1), h(p + 2)};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    game.strategies.push_back({a, b});
  }
  return game;
}

EmpiricalEstimate EmpiricalGame(const ConditionalSimulator& sim,
                                const IndexSet& indices,
                                const std::vector<Condition>& conditions) {
  if (conditions.empty()) throw std::invalid_argument("need >= 1 condition");
  const std::size_t m = conditions.size();
  EmpiricalEstimate out{std::vector<double>(indices.size(), 0.0),
                        SampleTensor(indices.size(), m)};
  for (std::size_t k = 0; k < indices.size(); ++k) {
    double mean = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      const double v = sim.Query(conditions[j], indices[k].player, indices[k].profile);
      out.samples.at(k, j) = v;
      mean += (v - mean) / static_cast<double>(j + 1);
    }
    out.means[k] = mean;
  }
  return out;
}

NormalFormGame Scatter(const NormalFormGame& into, const IndexSet& indices,
                       const std::vector<double>& means) {
  if (means.size() != indices.size())
    throw std::invalid_argument("one estimate per index");
  std::vector<double> u(into.utilities().begin(), into.utilities().end());
  for (std::size_t k = 0; k < indices.size(); ++k) u[into.FlatIndex(indices[k])] = means[k];
  return into.WithUtilities(std::move(u));
}

}  // namespace egta
