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

#ifndef EGTA_TESTS_HP_ORACLE_HPP_
#define EGTA_TESTS_HP_ORACLE_HPP_

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "egta/bounds.hpp"

namespace hp {

using boost::multiprecision::cpp_dec_float_50;
using HP = cpp_dec_float_50;

// 50-digit re-evaluations of the bound formulas.
inline HP HpTail(const HP& x, const HP& m) { return sqrt(x / (2 * m)); }

inline double HpHoeffding(double c, double n, double m, double delta) {
  return static_cast<double>(HP(c) * HpTail(log(2 * HP(n) / HP(delta)), HP(m)));
}

inline double HpEra(double r, double c, double m, double delta) {
  return static_cast<double>(2 * HP(r) + 3 * HP(c) * HpTail(-log(HP(delta)), HP(m)));
}

inline double HpRaUpper(double c, double n, double m, double delta) {
  return static_cast<double>(HP(c) * HpTail(log(HP(n)), HP(m)) +
                             HP(c) * HpTail(-log(HP(delta)), HP(m)));
}

inline double HpFactored(double a0, const std::vector<double>& a, const std::vector<double>& log_b,
                  double m) {
  HP total = HP(a0) / sqrt(HP(m));
  for (std::size_t i = 0; i < a.size(); ++i) {
    HP term = sqrt(2 * HP(log_b[i]) / HP(m));
    if (term > 1) term = 1;
    total += HP(a[i]) * term;
  }
  return static_cast<double>(total);
}

inline double HpNoise(const egta::NoiseProfile& np, double m) {
  HP total = HP(np.a) / sqrt(HP(m));
  for (std::size_t i = 0; i < np.log_counts.size(); ++i) {
    const double lf = std::max(np.log_counts[i], 0.0);
    HP term = HpTail(HP(lf), HP(m));
    if (term > 1) term = 1;
    total += HP(np.breakpoints[i + 1]) * term;
  }
  return static_cast<double>(total);
}

inline double RelErr(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}


// Largest relative error of the double-precision bounds over 100 random
// parameter draws.
inline double WorstBoundError(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  double worst = 0;
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) {
    return std::exp(std::log(lo) + u01(rng) * (std::log(hi) - std::log(lo)));
  };
  for (int draw = 0; draw < 100; ++draw) {
    const double c = log_uniform(1e-2, 1e3);
    const double n = std::floor(log_uniform(1, 1e12));
    const double m = std::floor(log_uniform(1, 1e7));
    const double delta = log_uniform(1e-9, 0.999);
    const double r = log_uniform(1e-6, 10);
    worst = std::max(worst, RelErr(egta::HoeffdingEps(c, n, m, delta), HpHoeffding(c, n, m, delta)));
    worst = std::max(worst, RelErr(egta::EraEps(r, c, m, delta), HpEra(r, c, m, delta)));
    const double ra = egta::RaEpsUpper(c, n, m, delta);
    worst = std::max(worst, RelErr(ra, HpRaUpper(c, n, m, delta)));

    const std::size_t k = rng() % 6;
    std::vector<double> a(k), lb(k);
    for (std::size_t i = 0; i < k; ++i) {
      a[i] = log_uniform(1e-3, 10);
      lb[i] = u01(rng) < 0.2 ? 0.0 : log_uniform(1e-3, 1e4);
    }
    const double a0 = log_uniform(1e-3, 10);
    worst = std::max(worst, RelErr(egta::FactoredRaBoundLog(a0, a, lb, m), HpFactored(a0, a, lb, m)));

    egta::NoiseProfile np{log_uniform(1e-3, 10), {0.0}, {}};
    for (std::size_t i = 0; i <= k; ++i) {
      np.breakpoints.push_back(np.breakpoints.back() + log_uniform(1e-3, 5));
      np.log_counts.push_back(u01(rng) < 0.2 ? -std::numeric_limits<double>::infinity()
                                             : log_uniform(1e-3, 1e4));
    }
    worst = std::max(worst, RelErr(egta::NoiseScalingRaBound(np, m), HpNoise(np, m)));
  }
  return worst;
}

}  // namespace hp

#endif  // EGTA_TESTS_HP_ORACLE_HPP_
