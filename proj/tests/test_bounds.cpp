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

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "egta/bounds.hpp"
#include "egta/rng.hpp"
#include "hp_oracle.hpp"

using namespace hp;

TEST_CASE("Hoeffding examples") {
  CHECK(egta::HoeffdingEpsSingle(2, 200, 2 * std::exp(-2.0)) ==
        doctest::Approx(0.1414213562).epsilon(1e-9));
  CHECK(egta::HoeffdingEpsSingle(10, 10000, 0.05) ==
        doctest::Approx(10 * std::sqrt(std::log(40.0) / 20000)).epsilon(1e-12));
  CHECK(egta::HoeffdingEpsSingle(10, 10000, 0.05) == doctest::Approx(0.13582).epsilon(1e-4));
  CHECK(egta::HoeffdingEps(2, 50, 200, 0.05) == doctest::Approx(0.27570).epsilon(1e-4));
  CHECK(egta::HoeffdingEps(3, 1, 77, 0.2) == egta::HoeffdingEpsSingle(3, 77, 0.2));

  double prev = egta::HoeffdingEpsSingle(1, 1, 0.1);
  for (double m = 2; m < 1e9; m *= 3) {
    const double e = egta::HoeffdingEpsSingle(1, m, 0.1);
    CHECK(e < prev);
    prev = e;
  }
  CHECK(prev < 1e-4);

  // Doubling |I| adds exactly c (sqrt((L + ln 2)/2m) - sqrt(L/2m)).
  const double c = 2, n = 37, m = 500, delta = 0.07;
  const double L = std::log(2 * n / delta);
  CHECK(egta::HoeffdingEps(c, 2 * n, m, delta) - egta::HoeffdingEps(c, n, m, delta) ==
        doctest::Approx(c * (std::sqrt((L + std::log(2.0)) / (2 * m)) -
                             std::sqrt(L / (2 * m))))
            .epsilon(1e-9));
  CHECK(egta::HoeffdingEpsLog(c, std::log(n), m, delta) ==
        doctest::Approx(egta::HoeffdingEps(c, n, m, delta)).epsilon(1e-14));
}

TEST_CASE("bound domains") {
  CHECK_THROWS_AS(egta::HoeffdingEps(0, 1, 10, 0.1), std::domain_error);
  CHECK_THROWS_AS(egta::HoeffdingEps(1, 0.5, 10, 0.1), std::domain_error);
  CHECK_THROWS_AS(egta::HoeffdingEps(1, 1, 0, 0.1), std::domain_error);
  CHECK_THROWS_AS(egta::HoeffdingEps(1, 1, 10, 0.0), std::domain_error);
  CHECK_THROWS_AS(egta::HoeffdingEps(1, 1, 10, 1.0), std::domain_error);
  CHECK_THROWS_AS(egta::EraEps(-0.1, 1, 10, 0.1), std::domain_error);
  CHECK_THROWS_AS(egta::RaEpsUpper(1, 0, 10, 0.1), std::domain_error);
  CHECK_THROWS_AS(egta::CrossoverSize(0.0), std::domain_error);
  CHECK_THROWS_AS(egta::CrossoverSize(1.5), std::domain_error);
  const std::vector<double> a{1.0};
  const std::vector<double> lb{-1.0};
  CHECK_THROWS_AS(egta::FactoredRaBoundLog(1, a, lb, 10), std::domain_error);
  const std::vector<double> lb2{1.0, 2.0};
  CHECK_THROWS_AS(egta::FactoredRaBoundLog(1, a, lb2, 10), std::domain_error);
  egta::NoiseProfile bad{1.0, {0.0, 1.0, 1.0}, {0.0, 0.0}};
  CHECK_THROWS_AS(egta::NoiseScalingRaBound(bad, 10), std::domain_error);
  egta::NoiseProfile shifted{1.0, {0.5, 1.0}, {0.0}};
  CHECK_THROWS_AS(egta::NoiseScalingRaBound(shifted, 10), std::domain_error);
}

TEST_CASE("one-ERA examples and properties") {
  CHECK(egta::OneEra(egta::SampleTensor(3, 4), egta::RademacherSigns({1, -1, 1, 1})) == 0);
  CHECK(egta::OneEra(egta::SampleTensor(1, 1, {3.0}), egta::RademacherSigns({1})) == 3);
  CHECK(egta::OneEra(egta::SampleTensor(2, 2, {1, 1, 1, -1}), egta::RademacherSigns({1, -1})) ==
        1);
  CHECK_THROWS_AS(egta::RademacherSigns({1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(egta::OneEra(egta::SampleTensor(1, 2), egta::RademacherSigns({1})),
                  std::invalid_argument);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 6, m = 1 + rng() % 30;
    std::vector<double> x(n * m);
    double max_abs = 0;
    for (double& v : x) {
      v = u(rng);
      max_abs = std::max(max_abs, std::abs(v));
    }
    const egta::SampleTensor t(n, m, x);
    const auto sigma = egta::RademacherSigns::Draw(m, rng());
    const double r = egta::OneEra(t, sigma);
    CHECK(r >= 0);
    CHECK(r <= max_abs + 1e-12);
    CHECK(egta::OneEra(t, sigma.Flipped()) == r);
  }
}

TEST_CASE("ERA and RA examples") {
  CHECK(egta::EraEps(0.1, 10, 10000, 0.1) == doctest::Approx(0.52178).epsilon(1e-4));
  CHECK(egta::EraEps(0.1, 10, 10000, 0.1) ==
        doctest::Approx(0.2 + 30 * std::sqrt(std::log(10.0) / 20000)).epsilon(1e-12));
  CHECK(egta::EraEps(0.0, 1, 100, 1 - 1e-12) < 1e-6);
  const double base = egta::EraEps(0.0, 3, 250, 0.2);
  for (double r : {0.1, 0.7, 2.5})
    CHECK(egta::EraEps(r, 3, 250, 0.2) - base == doctest::Approx(2 * r).epsilon(1e-12));

  CHECK(egta::RaEpsUpper(2, 1, 50, 0.1) ==
        doctest::Approx(2 * std::sqrt(std::log(10.0) / 100)).epsilon(1e-12));
  CHECK(egta::RaEpsUpper(1, std::exp(2.0), 2, std::exp(-1.0)) ==
        doctest::Approx(std::sqrt(0.5) + 0.5).epsilon(1e-12));
  std::mt19937_64 rng(9);
  for (int i = 0; i < 50; ++i) {
    const double n = 1 + rng() % 1000, m = 1 + rng() % 5000;
    CHECK(egta::RaEpsUpper(1.5, n, m, 0.05) >= 1.5 * std::sqrt(-std::log(0.05) / (2 * m)));
  }
}

TEST_CASE("crossover size") {
  CHECK(egta::CrossoverSize(0.1) == doctest::Approx(5e7).epsilon(1e-12));
  CHECK(egta::CrossoverSize(1.0) == 0.5);
  CHECK(egta::CrossoverSize(0.5) == 128);
}

TEST_CASE("factored RA bound examples") {
  CHECK(egta::FactoredRaBoundLog(2.0, {}, {}, 400) == doctest::Approx(0.1));
  const std::vector<double> a{1, 1, 1, 0.5, 0.5};
  const double ln100 = std::log(100.0);
  const std::vector<double> lb{0.0, std::log(35.0), ln100, 35 * ln100,
                               std::log(35.0) + 35 * ln100};
  const double v = egta::FactoredRaBoundLog(1, a, lb, 10000);
  CHECK(v == doctest::Approx(0.2476).epsilon(1e-3));
  CHECK(v == doctest::Approx(HpFactored(1, a, lb, 10000)).epsilon(1e-13));
  // A cardinality of 1 contributes nothing.
  const std::vector<double> one{1.0};
  const std::vector<std::uint64_t> b1{1};
  CHECK(egta::FactoredRaBound(0.5, one, b1, 100) == doctest::Approx(0.05));
  const std::vector<std::uint64_t> b{1, 35, 100};
  const std::vector<double> a3{1, 1, 1};
  CHECK(egta::FactoredRaBound(1, a3, b, 10000) ==
        doctest::Approx(egta::FactoredRaBoundLog(1, a3, std::vector<double>(lb.begin(), lb.begin() + 3),
                                                 10000))
            .epsilon(1e-14));
}

TEST_CASE("noise scaling RA bound examples") {
  const std::vector<std::uint64_t> one{1};
  const auto single = egta::NoiseProfile::FromCounts(1.0, {0.0, 2.0}, one);
  CHECK(egta::NoiseScalingRaBound(single, 100) == doctest::Approx(0.1));

  const std::vector<std::uint64_t> last{0, 0, 50};
  const auto tail = egta::NoiseProfile::FromCounts(1.0, {0.0, 0.5, 1.0, 2.0}, last);
  CHECK(egta::NoiseScalingRaBound(tail, 100) ==
        doctest::Approx(0.1 + 2.0 * std::sqrt(std::log(50.0) / 200)).epsilon(1e-12));

  // Dyadic profile for |P| = 3, |S| = 100: v_i = c 2^(i-n), F_i = ceil(N / 2^i).
  const double N = 3 * 1e6;
  const int n = static_cast<int>(std::ceil(std::log2(N)));
  std::vector<double> bp{0.0};
  std::vector<std::uint64_t> counts;
  for (int i = 1; i <= n; ++i) {
    bp.push_back(2.0 * std::ldexp(1.0, i - n));
    counts.push_back(static_cast<std::uint64_t>(std::ceil(N / std::ldexp(1.0, i))));
  }
  for (std::size_t i = 1; i < counts.size(); ++i) CHECK(2 * counts[i] >= counts[i - 1]);
  const auto dyadic = egta::NoiseProfile::FromCounts(1.0, bp, counts);
  const double v = egta::NoiseScalingRaBound(dyadic, 10000);
  CHECK(std::isfinite(v));
  CHECK(v > 0);
  CHECK(v == doctest::Approx(HpNoise(dyadic, 10000)).epsilon(1e-13));
}

TEST_CASE("all bounds shrink with m and grow with 1/delta") {
  const std::vector<double> a{1, 0.5};
  const std::vector<double> lb{3.0, 9.0};
  const egta::NoiseProfile np{1.0, {0.0, 1.0, 2.0}, {4.0, 8.0}};
  for (double m = 10; m < 1e6; m *= 7) {
    CHECK(egta::HoeffdingEps(1, 10, 7 * m, 0.1) < egta::HoeffdingEps(1, 10, m, 0.1));
    CHECK(egta::EraEps(0.1, 1, 7 * m, 0.1) < egta::EraEps(0.1, 1, m, 0.1));
    CHECK(egta::RaEpsUpper(1, 10, 7 * m, 0.1) < egta::RaEpsUpper(1, 10, m, 0.1));
    CHECK(egta::FactoredRaBoundLog(1, a, lb, 7 * m) < egta::FactoredRaBoundLog(1, a, lb, m));
    CHECK(egta::NoiseScalingRaBound(np, 7 * m) < egta::NoiseScalingRaBound(np, m));
    CHECK(egta::HoeffdingEps(1, 10, m, 0.01) > egta::HoeffdingEps(1, 10, m, 0.1));
    CHECK(egta::EraEps(0.1, 1, m, 0.01) > egta::EraEps(0.1, 1, m, 0.1));
    CHECK(egta::RaEpsUpper(1, 10, m, 0.01) > egta::RaEpsUpper(1, 10, m, 0.1));
  }
}

TEST_CASE("bound formulas match 50-digit evaluation on random draws") {
  CHECK(hp::WorstBoundError(2024) <= 1e-12);
  CHECK(hp::WorstBoundError(77) <= 1e-12);
}

TEST_CASE("Monte-Carlo RA respects Massart's bound") {
  const std::size_t n = 20, m = 50;
  const double c = 2.0;
  const egta::SampleFn uniform = [&](std::uint64_t seed, egta::SampleTensor& x) {
    egta::CounterRng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) x.at(i, j) = rng.Uniform(-c / 2, c / 2);
  };
  const auto est = egta::MonteCarloRa(uniform, n, m, 99, 500, 1);
  CHECK(est.mean > 0);
  CHECK(est.mean <= (c / 2) * std::sqrt(2 * std::log(2.0 * n) / m) + 3 * est.std_error);
  // Thread count does not change the estimate.
  const auto est4 = egta::MonteCarloRa(uniform, n, m, 99, 500, 4);
  CHECK(est4.mean == est.mean);
  CHECK(est4.std_error == est.std_error);
}
