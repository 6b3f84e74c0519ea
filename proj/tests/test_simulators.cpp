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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "egta/bounds.hpp"
#include "egta/game.hpp"
#include "egta/rng.hpp"
#include "egta/simulators.hpp"
#include "oracles.hpp"

using egta::NormalFormGame;

TEST_CASE("random games") {
  const auto g = egta::GenerateRandomGame(3, 3, 10.0, 1);
  CHECK(g.num_players() == 3);
  CHECK(g.num_profiles() == 27);
  for (double u : g.utilities()) {
    CHECK(u > -5.0);
    CHECK(u < 5.0);
  }
  CHECK(egta::GenerateRandomGame(3, 3, 10.0, 1).utilities()[5] == g.utilities()[5]);
  const auto other = egta::GenerateRandomGame(3, 3, 10.0, 2);
  CHECK(egta::LinfDistance(g, other) > 0);
  CHECK_THROWS_AS(egta::GenerateRandomGame(0, 3, 10.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(egta::GenerateRandomGame(2, 3, 0.0, 1), std::invalid_argument);
}

TEST_CASE("random congestion games") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto cg = egta::GenerateCongestionGame(5, 5, 2, 0.1, seed);
    CHECK_NOTHROW(cg.Validate());
    for (const auto& list : cg.strategies) {
      CHECK(list.size() >= 1);
      CHECK(list.size() <= 2);
      std::set<std::vector<int>> distinct(list.begin(), list.end());
      CHECK(distinct.size() == list.size());
      for (const auto& s : list) {
        CHECK(!s.empty());
        CHECK(s.front() == 0);
        CHECK(std::is_sorted(s.begin(), s.end()));
      }
    }
  }
  // Facility e (0-based) is included with probability alpha^e.
  int hits1 = 0, hits2 = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 4000; ++seed) {
    const auto cg = egta::GenerateCongestionGame(1, 3, 1, 0.5, seed);
    const auto& s = cg.strategies[0][0];
    hits1 += std::count(s.begin(), s.end(), 1);
    hits2 += std::count(s.begin(), s.end(), 2);
    ++total;
  }
  CHECK(hits1 / double(total) == doctest::Approx(0.5).epsilon(0.08));
  CHECK(hits2 / double(total) == doctest::Approx(0.25).epsilon(0.12));
  CHECK_THROWS_AS(egta::GenerateCongestionGame(2, 2, 4, 0.1, 1), std::invalid_argument);
  CHECK_THROWS_AS(egta::GenerateCongestionGame(2, 2, 2, 1.5, 1), std::invalid_argument);
}

TEST_CASE("expansion") {
  egta::CongestionGame single{1, 1, {{{0}}}, {1.0}};
  const auto g = egta::Expand(single);
  CHECK(g.size() == 1);
  CHECK(g.utility(0, std::size_t{0}) == -1);

  const auto ppa = egta::Expand(egta::PpaExampleGame());
  for (int p = 0; p < 3; ++p) {
    CHECK(ppa.utility(p, egta::StrategyProfile{0, 0, 0}) == -2);
    CHECK(ppa.utility(p, egta::StrategyProfile{1, 1, 1}) == -5);
  }

  // Independent cost computation on random instances.
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto cg = egta::GenerateCongestionGame(4, 4, 3, 0.6, seed);
    const auto e = egta::Expand(cg);
    std::vector<int> counts;
    for (const auto& l : cg.strategies) counts.push_back(static_cast<int>(l.size()));
    for (const auto& s : oracle::AllProfiles(counts)) {
      for (int p = 0; p < cg.num_players; ++p) {
        double cost = 0;
        for (int f : cg.strategies[p][s[p]]) {
          int load = 0;
          for (int q = 0; q < cg.num_players; ++q) {
            const auto& mine = cg.strategies[q][s[q]];
            load += std::count(mine.begin(), mine.end(), f);
          }
          cost += load;
        }
        CHECK(oracle::U(e, p, s) == -cost);
      }
    }
  }
}

TEST_CASE("price of anarchy") {
  egta::CongestionGame single{1, 2, {{{0}, {0, 1}}}, {1.0, 1.0}};
  CHECK(egta::PriceOfAnarchy(single).ppa == 1);

  // Two players sharing nothing: each picks its cheap private facility.
  egta::CongestionGame separate{2, 3, {{{0}, {2}}, {{1}, {2}}}, {1.0, 1.0, 5.0}};
  const auto sep = egta::PriceOfAnarchy(separate);
  CHECK(sep.ppa == 1);
  CHECK(sep.equilibria.size() == 1);

  const auto report = egta::PriceOfAnarchy(egta::PpaExampleGame());
  CHECK(report.optimum_cost == 6);
  CHECK(report.worst_equilibrium_cost == 15);
  CHECK(report.ppa == 2.5);
  CHECK(report.equilibria.size() == 2);
  const auto game = egta::Expand(egta::PpaExampleGame());
  CHECK(report.optimum_profile == game.ProfileIndex({0, 0, 0}));
  CHECK(oracle::Nash(game, 0.0).count({1, 1, 1}) == 1);
  CHECK(oracle::Nash(game, 0.0).count({0, 0, 0}) == 1);
  // (A,A,A) is the unique minimizer.
  int minimizers = 0;
  for (std::size_t s = 0; s < game.num_profiles(); ++s)
    minimizers += -egta::Welfare(game, s) == 6 ? 1 : 0;
  CHECK(minimizers == 1);
}

TEST_CASE("Rosenthal: generated congestion games have pure equilibria") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto cg = egta::GenerateCongestionGame(1 + seed % 5, 2 + seed % 4, 1 + seed % 3, 0.5,
                                                 seed);
    CHECK_FALSE(oracle::Nash(egta::Expand(cg), 0.0).empty());
  }
}

TEST_CASE("noisy simulator") {
  const auto base = egta::GenerateRandomGame(2, 3, 10.0, 4);
  const egta::NoisySimulator exact(base, 0.0);
  for (std::size_t s = 0; s < base.num_profiles(); ++s)
    CHECK(exact.Query({123}, 1, s) == base.utility(1, s));

  const double d = 2.0;
  const egta::NoisySimulator sim(base, d);
  const auto [lo, hi] = std::minmax_element(base.utilities().begin(), base.utilities().end());
  CHECK(sim.range() == doctest::Approx(*hi - *lo + d));
  CHECK(sim.center() == doctest::Approx((*hi + *lo) / 2));
  for (std::uint64_t x = 0; x < 200; ++x) {
    for (int p = 0; p < 2; ++p) {
      for (std::size_t s = 0; s < base.num_profiles(); ++s) {
        const double v = sim.Query({x}, p, s);
        CHECK(std::abs(v - base.utility(p, s)) < d / 2);
        CHECK(std::abs(v - sim.center()) <= sim.range() / 2);
        CHECK(v == sim.Query({x}, p, s));
      }
    }
  }
  const egta::NoisySimulator declared(base, d, 15.0);
  CHECK(declared.range() == 15.0);
  CHECK(declared.center() == 0.0);

  // Mean over 1e5 conditions is within 3 standard errors of the base.
  const std::size_t m = 100000;
  double mean = 0;
  for (std::size_t j = 0; j < m; ++j) mean += sim.Query({egta::Hash({77, j})}, 0, 4);
  mean /= m;
  CHECK(std::abs(mean - base.utility(0, 4)) <= 3 * d / std::sqrt(12.0 * m));
  CHECK_THROWS_AS(egta::NoisySimulator(base, -1.0), std::invalid_argument);
}

TEST_CASE("factored simulator") {
  const auto base = egta::GenerateRandomGame(3, 2, 4.0, 8);
  using K = egta::FactorKind;
  const std::vector<K> kinds{K::kGlobal, K::kAgent, K::kOwnStrategy, K::kProfile,
                             K::kAgentProfile};
  const egta::FactoredSimulator zero(base, {0, 0, 0, 0, 0}, kinds, 1);
  for (std::size_t s = 0; s < base.num_profiles(); ++s)
    CHECK(zero.Query({5}, 2, s) == base.utility(2, s));

  const std::vector<double> a{1, 1, 1, 0.5, 0.5};
  const egta::FactoredSimulator sim(base, a, kinds, 1);
  CHECK(sim.LogCardinality(0) == 0);
  CHECK(sim.LogCardinality(1) == doctest::Approx(std::log(3.0)));
  CHECK(sim.LogCardinality(2) == doctest::Approx(std::log(2.0)));
  CHECK(sim.LogCardinality(3) == doctest::Approx(std::log(8.0)));
  CHECK(sim.LogCardinality(4) == doctest::Approx(std::log(24.0)));
  for (std::uint64_t x = 0; x < 100; ++x) {
    for (int p = 0; p < 3; ++p)
      for (std::size_t s = 0; s < base.num_profiles(); ++s)
        CHECK(std::abs(sim.Query({x}, p, s) - sim.center()) <= sim.range() / 2);
  }

  // A lone global factor shifts every index by the same amount.
  const egta::FactoredSimulator global(base, {1.0}, {K::kGlobal}, 3);
  for (std::uint64_t x = 0; x < 20; ++x) {
    const double shift = global.Query({x}, 0, 0) - base.utility(0, 0);
    CHECK(shift != 0);
    for (int p = 0; p < 3; ++p)
      for (std::size_t s = 0; s < base.num_profiles(); ++s)
        CHECK(global.Query({x}, p, s) - base.utility(p, s) == doctest::Approx(shift));
  }
  // An agent factor is shared across profiles but not across players.
  const egta::FactoredSimulator agent(base, {1.0}, {K::kAgent}, 3);
  CHECK(agent.Query({1}, 0, 0) - base.utility(0, 0) ==
        doctest::Approx(agent.Query({1}, 0, 5) - base.utility(0, 5)));
  CHECK(agent.Query({1}, 0, 0) - base.utility(0, 0) !=
        doctest::Approx(agent.Query({1}, 1, 0) - base.utility(1, 0)));
  CHECK_THROWS_AS(egta::FactoredSimulator(base, {1.0}, {}, 1), std::invalid_argument);
}

TEST_CASE("empirical game") {
  const auto base = egta::GenerateRandomGame(2, 2, 10.0, 12);
  const egta::NoisySimulator sim(base, 3.0);
  const auto all = egta::IndexSet::Full(base);
  const auto one = egta::EmpiricalGame(sim, all, {{42}});
  for (std::size_t k = 0; k < all.size(); ++k) {
    CHECK(one.means[k] == sim.Query({42}, all[k].player, all[k].profile));
    CHECK(one.samples.at(k, 0) == one.means[k]);
  }

  const egta::NoisySimulator exact(base, 0.0);
  std::vector<egta::Condition> xs;
  for (std::uint64_t j = 0; j < 37; ++j) xs.push_back({j});
  const auto flat = egta::EmpiricalGame(exact, all, xs);
  for (std::size_t k = 0; k < all.size(); ++k) CHECK(flat.means[k] == base(all[k]));

  const auto scattered = egta::Scatter(base, all, flat.means);
  CHECK(egta::LinfDistance(scattered, base) == 0);
  CHECK_THROWS_AS(egta::EmpiricalGame(sim, all, {}), std::invalid_argument);
}

TEST_CASE("empirical game concentrates within the Hoeffding radius") {
  const auto base = egta::GenerateRandomGame(2, 3, 10.0, 21);
  const egta::NoisySimulator sim(base, 5.0, 15.0);
  const auto all = egta::IndexSet::Full(base);
  const std::size_t m = 10000;
  const double eps = egta::HoeffdingEps(sim.range(), all.size(), m, 0.01);
  int ok = 0;
  for (std::uint64_t rep = 0; rep < 100; ++rep) {
    std::vector<egta::Condition> xs(m);
    for (std::size_t j = 0; j < m; ++j) xs[j] = {egta::Hash({rep, j})};
    const auto est = egta::EmpiricalGame(sim, all, xs);
    double worst = 0;
    for (std::size_t k = 0; k < all.size(); ++k)
      worst = std::max(worst, std::abs(est.means[k] - base(all[k])));
    ok += worst <= eps ? 1 : 0;
  }
  CHECK(ok >= 99);
}
