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

#include "egta/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "egta/parallel.hpp"
#include "egta/rng.hpp"

namespace egta {
namespace {

void RequirePositive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string(what) + " must be positive and finite");
}

void RequireSamples(double m) {
  if (!(m >= 1.0) || !std::isfinite(m))
    throw std::domain_error("sample count m must be >= 1");
}

void RequireProbability(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("delta must lie in (0, 1)");
}

// sqrt(x / (2m)).
double TailRoot(double x, double m) { return std::sqrt(x / (2.0 * m)); }

}  // namespace

SampleTensor::SampleTensor(std::size_t num_indices, std::size_t num_samples)
    : rows_(num_indices), cols_(num_samples), values_(num_indices * num_samples) {}

SampleTensor::SampleTensor(std::size_t num_indices, std::size_t num_samples,
                           std::vector<double> values)
    : rows_(num_indices), cols_(num_samples), values_(std::move(values)) {
  if (values_.size() != rows_ * cols_)
    throw std::invalid_argument("sample tensor dimensions do not match data");
  for (double v : values_) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite sample");
  }
}

RademacherSigns::RademacherSigns(std::vector<int> signs) : signs_(std::move(signs)) {
  for (int s : signs_) {
    if (s != 1 && s != -1) throw std::invalid_argument("signs must be +-1");
  }
}

RademacherSigns RademacherSigns::Draw(std::size_t m, std::uint64_t seed) {
  std::vector<int> signs(m);
  for (std::size_t j = 0; j < m; ++j) signs[j] = RademacherSign(Hash({seed, j}));
  return RademacherSigns(std::move(signs));
}

RademacherSigns RademacherSigns::Flipped() const {
  std::vector<int> flipped(signs_);
  for (int& s : flipped) s = -s;
  return RademacherSigns(std::move(flipped));
}

NoiseProfile NoiseProfile::FromCounts(double a, std::vector<double> breakpoints,
                                      std::span<const std::uint64_t> counts) {
  NoiseProfile profile{a, std::move(breakpoints), {}};
  profile.log_counts.reserve(counts.size());
  for (std::uint64_t k : counts) {
    profile.log_counts.push_back(
        k == 0 ? -std::numeric_limits<double>::infinity()
               : std::log(static_cast<double>(k)));
  }
  profile.Validate();
  return profile;
}

void NoiseProfile::Validate() const {
  if (!(a >= 0.0)) throw std::domain_error("noise profile: a must be >= 0");
  if (breakpoints.size() < 2 || breakpoints.front() != 0.0)
    throw std::domain_error("noise profile: breakpoints must start at 0");
  for (std::size_t i = 1; i < breakpoints.size(); ++i) {
    if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i]))
      throw std::domain_error("noise profile: breakpoints must increase");
  }
  if (log_counts.size() + 1 != breakpoints.size())
    throw std::domain_error("noise profile: one count per interval");
  for (double lc : log_counts) {
    if (std::isnan(lc) || lc == std::numeric_limits<double>::infinity())
      throw std::domain_error("noise profile: invalid count");
  }
}

double HoeffdingEpsSingle(double c, double m, double delta) {
  return HoeffdingEps(c, 1.0, m, delta);
}

double HoeffdingEps(double c, double num_indices, double m, double delta) {
  if (!(num_indices >= 1.0)) throw std::domain_error("|I| must be >= 1");
  return HoeffdingEpsLog(c, std::log(num_indices), m, delta);
}

double HoeffdingEpsLog(double c, double log_num_indices, double m, double delta) {
  RequirePositive(c, "range c");
  RequireSamples(m);
  RequireProbability(delta);
  if (!(log_num_indices >= 0.0)) throw std::domain_error("|I| must be >= 1");
  return c * TailRoot(std::log(2.0) + log_num_indices - std::log(delta), m);
}

double OneEra(const SampleTensor& samples, const RademacherSigns& sigma) {
  if (sigma.size() != samples.num_samples())
    throw std::invalid_argument("sign vector length differs from sample count");
  const double m = static_cast<double>(samples.num_samples());
  double sup = 0.0;
  for (std::size_t i = 0; i < samples.num_indices(); ++i) {
    double acc = 0.0;
    const auto row = samples.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) acc += sigma[j] * row[j];
    sup = std::max(sup, std::abs(acc) / m);
  }
  return sup;
}

double EraEps(double one_era, double c, double m, double delta) {
  if (!(one_era >= 0.0)) throw std::domain_error("1-ERA must be >= 0");
  RequirePositive(c, "range c");
  RequireSamples(m);
  RequireProbability(delta);
  return 2.0 * one_era + 3.0 * c * TailRoot(-std::log(delta), m);
}

double RaEpsUpper(double c, double num_indices, double m, double delta) {
  if (!(num_indices >= 1.0)) throw std::domain_error("|I| must be >= 1");
  return RaEpsUpperLog(c, std::log(num_indices), m, delta);
}

double RaEpsUpperLog(double c, double log_num_indices, double m, double delta) {
  RequirePositive(c, "range c");
  RequireSamples(m);
  RequireProbability(delta);
  if (!(log_num_indices >= 0.0)) throw std::domain_error("|I| must be >= 1");
  return c * TailRoot(log_num_indices, m) + c * TailRoot(-std::log(delta), m);
}

double CrossoverSize(double delta) {
  if (!(delta > 0.0 && delta <= 1.0))
    throw std::domain_error("delta must lie in (0, 1]");
  // (1/delta)^8 / 2 is exact for delta = 10^-k.
  return 0.5 * std::pow(1.0 / delta, 8);
}

double FactoredRaBoundLog(double a0, std::span<const double> scales,
                          std::span<const double> log_cardinalities, double m) {
  RequireSamples(m);
  if (!(a0 >= 0.0)) throw std::domain_error("a0 must be >= 0");
  if (scales.size() != log_cardinalities.size())
    throw std::domain_error("one cardinality per factor scale");
  double total = a0 / std::sqrt(m);
  for (std::size_t i = 0; i < scales.size(); ++i) {
    RequirePositive(scales[i], "factor scale");
    if (!(log_cardinalities[i] >= 0.0))
      throw std::domain_error("factor cardinality must be >= 1");
    total += scales[i] * std::min(1.0, std::sqrt(2.0 * log_cardinalities[i] / m));
  }
  return total;
}

double FactoredRaBound(double a0, std::span<const double> scales,
                       std::span<const std::uint64_t> cardinalities, double m) {
  std::vector<double> logs;
  logs.reserve(cardinalities.size());
  for (std::uint64_t b : cardinalities) {
    if (b == 0) throw std::domain_error("factor cardinality must be >= 1");
    logs.push_back(std::log(static_cast<double>(b)));
  }
  return FactoredRaBoundLog(a0, scales, logs, m);
}

double NoiseScalingRaBound(const NoiseProfile& profile, double m) {
  RequireSamples(m);
  profile.Validate();
  double total = profile.a / std::sqrt(m);
  for (std::size_t i = 0; i < profile.log_counts.size(); ++i) {
    const double log_f = std::max(profile.log_counts[i], 0.0);
    total += profile.breakpoints[i + 1] * std::min(1.0, TailRoot(log_f, m));
  }
  return total;
}

RaEstimate MonteCarloRa(const SampleFn& sample, std::size_t num_indices,
                        std::size_t m, std::uint64_t seed, std::size_t draws,
                        unsigned threads) {
  if (draws == 0) throw std::domain_error("need at least one draw");
  std::vector<double> values(draws);
  ParallelFor(draws, threads, [&](std::size_t k) {
    SampleTensor x(num_indices, m);
    sample(Hash({seed, k, 0}), x);
    values[k] = OneEra(x, RademacherSigns::Draw(m, Hash({seed, k, 1})));
  });
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(draws);
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  var = draws > 1 ? var / static_cast<double>(draws - 1) : 0.0;
  return {mean, std::sqrt(var / static_cast<double>(draws))};
}

}  // namespace egta
