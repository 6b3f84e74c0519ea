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

#ifndef EGTA_GAME_HPP_
#define EGTA_GAME_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace egta {

// One pure strategy per player, 0-based.
using StrategyProfile = std::vector<int>;

// Per-player probability vectors over that player's strategies.
using MixedProfile = std::vector<std::vector<double>>;

// Per-player lists of strategy indices (ascending).
using StrategySets = std::vector<std::vector<int>>;

// A (player, profile-index) pair addressing one utility entry.
struct Index {
  int player = 0;
  std::size_t profile = 0;

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;
};

// Dense normal-form game. Profiles are linearized row-major over players in
// order (the last player's strategy varies fastest); utilities are stored
// player-major, i.e. entry (p, s) lives at p * num_profiles() + s.
class NormalFormGame {
 public:
  NormalFormGame() = default;
  // Throws std::invalid_argument on empty/non-positive counts, a utility
  // tensor of the wrong length, or non-finite entries.
  NormalFormGame(std::vector<int> strategy_counts, std::vector<double> utilities);

  static NormalFormGame Zeros(std::vector<int> strategy_counts);

  int num_players() const { return static_cast<int>(counts_.size()); }
  int num_strategies(int player) const;
  std::span<const int> strategy_counts() const { return counts_; }
  std::size_t num_profiles() const { return num_profiles_; }
  // |P| * prod_p |S_p|, the number of utility entries.
  std::size_t size() const { return utilities_.size(); }
  std::span<const double> utilities() const { return utilities_; }

  double utility(int player, std::size_t profile) const;
  double utility(int player, const StrategyProfile& profile) const;
  double operator()(const Index& i) const { return utility(i.player, i.profile); }

  std::size_t ProfileIndex(const StrategyProfile& profile) const;
  StrategyProfile DecodeProfile(std::size_t profile) const;
  int StrategyOf(std::size_t profile, int player) const {
    return static_cast<int>((profile / strides_[player]) % counts_[player]);
  }
  // The profile obtained by switching `player` to `strategy`.
  std::size_t Deviate(std::size_t profile, int player, int strategy) const {
    const auto current = static_cast<std::size_t>(StrategyOf(profile, player));
    return profile - current * strides_[player] +
           static_cast<std::size_t>(strategy) * strides_[player];
  }
  std::size_t FlatIndex(const Index& i) const {
    return static_cast<std::size_t>(i.player) * num_profiles_ + i.profile;
  }
  bool SameShape(const NormalFormGame& other) const {
    return counts_ == other.counts_;
  }

  // Copy with the given entries replaced. Used when scattering estimates.
  NormalFormGame WithUtilities(std::vector<double> utilities) const {
    return NormalFormGame(counts_, std::move(utilities));
  }

 private:
  void CheckPlayer(int player) const;
  void CheckProfile(std::size_t profile) const;

  std::vector<int> counts_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_ = 0;
  std::vector<double> utilities_;
};

// Ordered, duplicate-free set of (player, profile) indices for one game shape.
class IndexSet {
 public:
  IndexSet() = default;
  // Sorts and validates; throws std::invalid_argument on duplicates or
  // out-of-range entries.
  IndexSet(const NormalFormGame& shape, std::vector<Index> indices);

  static IndexSet Full(const NormalFormGame& shape);
  // Every (p, s) with s in the product of `strategies`.
  static IndexSet Product(const NormalFormGame& shape,
                          const StrategySets& strategies);

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  bool contains(const Index& i) const;
  std::span<const Index> indices() const { return indices_; }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  const Index& operator[](std::size_t k) const { return indices_[k]; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.indices_ == b.indices_;
  }

 private:
  IndexSet(std::vector<Index> sorted, std::vector<bool> mask,
           std::size_t num_profiles)
      : indices_(std::move(sorted)), mask_(std::move(mask)),
        num_profiles_(num_profiles) {}

  std::vector<Index> indices_;
  std::vector<bool> mask_;  // flat membership, p * num_profiles + s
  std::size_t num_profiles_ = 0;
};

double Utility(const NormalFormGame& game, int player,
               const StrategyProfile& profile);

// Expected utility of every player under independent mixing.
// Throws std::invalid_argument unless each vector is a distribution (1e-12).
std::vector<double> MixedUtility(const NormalFormGame& game,
                                 const MixedProfile& mixed);

// max_{s'} u_p(s', s_-p) - u_p(s); always >= 0.
double PureRegret(const NormalFormGame& game, int player, std::size_t profile);
double PureRegret(const NormalFormGame& game, int player,
                  const StrategyProfile& profile);

// Profiles whose every player has regret <= eps, ascending by index.
std::vector<std::size_t> PureEpsNash(const NormalFormGame& game, double eps);

// True iff u_p(s, s_-p) >= u_p(s', s_-p) + eps for every s_-p drawn from
// `restrict_to` (all strategies when empty).
bool EpsDominates(const NormalFormGame& game, int player, int s, int s_prime,
                  double eps, const StrategySets& restrict_to = {});

// Iterated simultaneous elimination of eps-dominated strategies, starting
// from `initial` (all strategies when empty).
StrategySets Rationalizable(const NormalFormGame& game, double eps,
                            const StrategySets& initial = {});

double Welfare(const NormalFormGame& game, std::size_t profile);
double Welfare(const NormalFormGame& game, const StrategyProfile& profile);

double PessimalValue(const NormalFormGame& game, int player, int strategy);
double MaximinValue(const NormalFormGame& game, int player);

// Throws std::invalid_argument on shape mismatch.
double LinfDistance(const NormalFormGame& a, const NormalFormGame& b);

// Nash_0(a) ⊆ Nash_2eps(b) ⊆ Nash_4eps(a).
bool CheckContainment(const NormalFormGame& a, const NormalFormGame& b,
                      double eps);

inline std::size_t GameSize(const NormalFormGame& game) { return game.size(); }

}  // namespace egta

#endif  // EGTA_GAME_HPP_
