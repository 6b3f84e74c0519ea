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

#include "egta/game.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace egta {
namespace {

std::size_t CheckedProduct(const std::vector<int>& counts) {
  std::size_t n = 1;
  for (int k : counts) {
    if (k <= 0) throw std::invalid_argument("strategy counts must be positive");
    if (n > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(k))
      throw std::invalid_argument("game too large");
    n *= static_cast<std::size_t>(k);
  }
  return n;
}

// Calls fn(profile) for each profile whose coordinates all lie in `sets`
// (with `fixed_player` pinned to `fixed_strategy` when >= 0).
template <typename Fn>
void ForEachProfileIn(const NormalFormGame& game, const StrategySets& sets,
                      int fixed_player, int fixed_strategy, Fn&& fn) {
  const int n = game.num_players();
  std::vector<std::size_t> cursor(n, 0);
  StrategyProfile profile(n);
  auto choice = [&](int p, std::size_t k) {
    return p == fixed_player ? fixed_strategy : sets[p][k];
  };
  auto extent = [&](int p) {
    return p == fixed_player ? std::size_t{1} : sets[p].size();
  };
  for (int p = 0; p < n; ++p) {
    if (extent(p) == 0) return;
  }
  while (true) {
    for (int p = 0; p < n; ++p) profile[p] = choice(p, cursor[p]);
    fn(game.ProfileIndex(profile));
    int p = n - 1;
    while (p >= 0) {
      if (++cursor[p] < extent(p)) break;
      cursor[p] = 0;
      --p;
    }
    if (p < 0) return;
  }
}

StrategySets AllStrategies(const NormalFormGame& game) {
  StrategySets sets(game.num_players());
  for (int p = 0; p < game.num_players(); ++p) {
    for (int s = 0; s < game.num_strategies(p); ++s) sets[p].push_back(s);
  }
  return sets;
}

}  // namespace

NormalFormGame::NormalFormGame(std::vector<int> strategy_counts,
                               std::vector<double> utilities)
    : counts_(std::move(strategy_counts)), utilities_(std::move(utilities)) {
  if (counts_.empty()) throw std::invalid_argument("game needs >= 1 player");
  num_profiles_ = CheckedProduct(counts_);
  strides_.assign(counts_.size(), 1);
  for (int p = num_players() - 2; p >= 0; --p) {
    strides_[p] = strides_[p + 1] * static_cast<std::size_t>(counts_[p + 1]);
  }
  const std::size_t expected = num_profiles_ * counts_.size();
  if (utilities_.size() != expected) {
    throw std::invalid_argument("utility tensor has " +
                                std::to_string(utilities_.size()) +
                                " entries, expected " + std::to_string(expected));
  }
  for (double u : utilities_) {
    if (!std::isfinite(u)) throw std::invalid_argument("non-finite utility");
  }
}

NormalFormGame NormalFormGame::Zeros(std::vector<int> strategy_counts) {
  const std::size_t n = CheckedProduct(strategy_counts) * strategy_counts.size();
  return NormalFormGame(std::move(strategy_counts), std::vector<double>(n, 0.0));
}

int NormalFormGame::num_strategies(int player) const {
  CheckPlayer(player);
  return counts_[player];
}

void NormalFormGame::CheckPlayer(int player) const {
  if (player < 0 || player >= num_players())
    throw std::out_of_range("player " + std::to_string(player) + " out of range");
}

void NormalFormGame::CheckProfile(std::size_t profile) const {
  if (profile >= num_profiles_)
    throw std::out_of_range("profile index " + std::to_string(profile) +
                            " out of range");
}

double NormalFormGame::utility(int player, std::size_t profile) const {
  CheckPlayer(player);
  CheckProfile(profile);
  return utilities_[static_cast<std::size_t>(player) * num_profiles_ + profile];
}

double NormalFormGame::utility(int player, const StrategyProfile& profile) const {
  return utility(player, ProfileIndex(profile));
}

std::size_t NormalFormGame::ProfileIndex(const StrategyProfile& profile) const {
  if (profile.size() != counts_.size())
    throw std::out_of_range("profile has wrong number of players");
  std::size_t index = 0;
  for (std::size_t p = 0; p < counts_.size(); ++p) {
    if (profile[p] < 0 || profile[p] >= counts_[p])
      throw std::out_of_range("strategy out of range for player " +
                              std::to_string(p));
    index += static_cast<std::size_t>(profile[p]) * strides_[p];
  }
  return index;
}

StrategyProfile NormalFormGame::DecodeProfile(std::size_t profile) const {
  CheckProfile(profile);
  StrategyProfile s(counts_.size());
  for (int p = 0; p < num_players(); ++p) s[p] = StrategyOf(profile, p);
  return s;
}

IndexSet::IndexSet(const NormalFormGame& shape, std::vector<Index> indices)
    : indices_(std::move(indices)),
      mask_(shape.size(), false),
      num_profiles_(shape.num_profiles()) {
  std::sort(indices_.begin(), indices_.end());
  for (const Index& i : indices_) {
    if (i.player < 0 || i.player >= shape.num_players() ||
        i.profile >= shape.num_profiles())
      throw std::invalid_argument("index out of range for game");
    const std::size_t flat = shape.FlatIndex(i);
    if (mask_[flat]) throw std::invalid_argument("duplicate index");
    mask_[flat] = true;
  }
}

IndexSet IndexSet::Full(const NormalFormGame& shape) {
  std::vector<Index> all;
  all.reserve(shape.size());
  for (int p = 0; p < shape.num_players(); ++p) {
    for (std::size_t s = 0; s < shape.num_profiles(); ++s) all.push_back({p, s});
  }
  return IndexSet(std::move(all), std::vector<bool>(shape.size(), true),
                  shape.num_profiles());
}

IndexSet IndexSet::Product(const NormalFormGame& shape,
                           const StrategySets& strategies) {
  if (strategies.size() != static_cast<std::size_t>(shape.num_players()))
    throw std::invalid_argument("strategy sets do not match player count");
  std::vector<std::size_t> profiles;
  ForEachProfileIn(shape, strategies, -1, -1,
                   [&](std::size_t s) { profiles.push_back(s); });
  std::sort(profiles.begin(), profiles.end());
  std::vector<Index> out;
  out.reserve(profiles.size() * strategies.size());
  for (int p = 0; p < shape.num_players(); ++p) {
    for (std::size_t s : profiles) out.push_back({p, s});
  }
  return IndexSet(shape, std::move(out));
}

bool IndexSet::contains(const Index& i) const {
  const std::size_t flat = static_cast<std::size_t>(i.player) * num_profiles_ + i.profile;
  return i.player >= 0 && flat < mask_.size() && mask_[flat];
}

double Utility(const NormalFormGame& game, int player,
               const StrategyProfile& profile) {
  return game.utility(player, profile);
}

std::vector<double> MixedUtility(const NormalFormGame& game,
                                 const MixedProfile& mixed) {
  const int n = game.num_players();
  if (mixed.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("mixed profile has wrong number of players");
  for (int p = 0; p < n; ++p) {
    if (mixed[p].size() != static_cast<std::size_t>(game.num_strategies(p)))
      throw std::invalid_argument("mixed strategy has wrong length");
    double total = 0.0;
    for (double w : mixed[p]) {
      if (!(w >= 0.0)) throw std::invalid_argument("negative probability");
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
      throw std::invalid_argument("mixed strategy does not sum to 1");
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t s = 0; s < game.num_profiles(); ++s) {
    double weight = 1.0;
    for (int p = 0; p < n && weight != 0.0; ++p) {
      weight *= mixed[p][game.StrategyOf(s, p)];
    }
    if (weight == 0.0) continue;
    for (int p = 0; p < n; ++p) out[p] += weight * game.utility(p, s);
  }
  return out;
}

double PureRegret(const NormalFormGame& game, int player, std::size_t profile) {
  const double current = game.utility(player, profile);
  double best = current;
  for (int s = 0; s < game.num_strategies(player); ++s) {
    best = std::max(best, game.utility(player, game.Deviate(profile, player, s)));
  }
  return best - current;
}

double PureRegret(const NormalFormGame& game, int player,
                  const StrategyProfile& profile) {
  return PureRegret(game, player, game.ProfileIndex(profile));
}

std::vector<std::size_t> PureEpsNash(const NormalFormGame& game, double eps) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < game.num_profiles(); ++s) {
    bool stable = true;
    for (int p = 0; p < game.num_players() && stable; ++p) {
      stable = PureRegret(game, p, s) <= eps;
    }
    if (stable) out.push_back(s);
  }
  return out;
}

bool EpsDominates(const NormalFormGame& game, int player, int s, int s_prime,
                  double eps, const StrategySets& restrict_to) {
  if (s < 0 || s >= game.num_strategies(player) || s_prime < 0 ||
      s_prime >= game.num_strategies(player))
    throw std::out_of_range("strategy out of range");
  const StrategySets sets = restrict_to.empty() ? AllStrategies(game) : restrict_to;
  bool dominates = true;
  ForEachProfileIn(game, sets, player, s_prime, [&](std::size_t prof) {
    if (!dominates) return;
    const double with_s = game.utility(player, game.Deviate(prof, player, s));
    dominates = with_s >= game.utility(player, prof) + eps;
  });
  return dominates;
}

StrategySets Rationalizable(const NormalFormGame& game, double eps,
                            const StrategySets& initial) {
  if (!(eps >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  StrategySets alive = initial.empty() ? AllStrategies(game) : initial;
  if (alive.size() != static_cast<std::size_t>(game.num_players()))
    throw std::invalid_argument("strategy sets do not match player count");
  for (auto& set : alive) {
    std::sort(set.begin(), set.end());
    if (set.empty()) throw std::invalid_argument("empty strategy set");
  }
  bool changed = true;
  while (changed) {
    changed = false;
    StrategySets next(alive.size());
    for (int p = 0; p < game.num_players(); ++p) {
      for (int victim : alive[p]) {
        bool eliminated = false;
        for (int other : alive[p]) {
          if (other == victim) continue;
          if (EpsDominates(game, p, other, victim, eps, alive) &&
              !EpsDominates(game, p, victim, other, eps, alive)) {
            eliminated = true;
            break;
          }
        }
        if (!eliminated) next[p].push_back(victim);
      }
      changed = changed || next[p].size() != alive[p].size();
    }
    alive = std::move(next);
  }
  return alive;
}

double Welfare(const NormalFormGame& game, std::size_t profile) {
  double total = 0.0;
  for (int p = 0; p < game.num_players(); ++p) total += game.utility(p, profile);
  return total;
}

double Welfare(const NormalFormGame& game, const StrategyProfile& profile) {
  return Welfare(game, game.ProfileIndex(profile));
}

double PessimalValue(const NormalFormGame& game, int player, int strategy) {
  if (strategy < 0 || strategy >= game.num_strategies(player))
    throw std::out_of_range("strategy out of range");
  double worst = std::numeric_limits<double>::infinity();
  ForEachProfileIn(game, AllStrategies(game), player, strategy,
                   [&](std::size_t s) {
                     worst = std::min(worst, game.utility(player, s));
                   });
  return worst;
}

double MaximinValue(const NormalFormGame& game, int player) {
  double best = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < game.num_strategies(player); ++s) {
    best = std::max(best, PessimalValue(game, player, s));
  }
  return best;
}

double LinfDistance(const NormalFormGame& a, const NormalFormGame& b) {
  if (!a.SameShape(b)) throw std::invalid_argument("game shapes differ");
  double worst = 0.0;
  const auto ua = a.utilities();
  const auto ub = b.utilities();
  for (std::size_t i = 0; i < ua.size(); ++i) {
    worst = std::max(worst, std::abs(ua[i] - ub[i]));
  }
  return worst;
}

bool CheckContainment(const NormalFormGame& a, const NormalFormGame& b,
                      double eps) {
  if (!a.SameShape(b)) throw std::invalid_argument("game shapes differ");
  const auto inner = PureEpsNash(a, 0.0);
  const auto middle = PureEpsNash(b, 2.0 * eps);
  const auto outer = PureEpsNash(a, 4.0 * eps);
  return std::includes(middle.begin(), middle.end(), inner.begin(), inner.end()) &&
         std::includes(outer.begin(), outer.end(), middle.begin(), middle.end());
}

}  // namespace egta
