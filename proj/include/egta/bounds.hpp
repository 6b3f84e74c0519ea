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

#ifndef EGTA_BOUNDS_HPP_
#define EGTA_BOUNDS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

// Concentration bounds for uniform approximation of a game's utilities.
// Every function validates its domain and throws std::domain_error.
//
// Notation: c is the width of the utility range (samples lie in [-c/2, c/2]),
// m the number of sampled conditions, delta the failure probability and
// |I| the number of (player, profile) utilities estimated simultaneously.

namespace egta {

// Per-condition utilities u_p(s; X_j), one row of m samples per index.
class SampleTensor {
 public:
  SampleTensor(std::size_t num_indices, std::size_t num_samples);
  SampleTensor(std::size_t num_indices, std::size_t num_samples,
               std::vector<double> values);

  std::size_t num_indices() const { return rows_; }
  std::size_t num_samples() const { return cols_; }
  double& at(std::size_t index, std::size_t sample) {
    return values_[index * cols_ + sample];
  }
  double at(std::size_t index, std::size_t sample) const {
    return values_[index * cols_ + sample];
  }
  std::span<const double> row(std::size_t index) const {
    return {values_.data() + index * cols_, cols_};
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> values_;
};

// Vector of +-1 signs.
class RademacherSigns {
 public:
  explicit RademacherSigns(std::vector<int> signs);
  // Deterministic draw of m signs from `seed`.
  static RademacherSigns Draw(std::size_t m, std::uint64_t seed);

  std::size_t size() const { return signs_.size(); }
  int operator[](std::size_t j) const { return signs_[j]; }
  RademacherSigns Flipped() const;

 private:
  std::vector<int> signs_;
};

// Inputs to the variable-scale noise bound. Interval i spans
// (breakpoints[i], breakpoints[i+1]] and holds log_counts[i] = ln F(v_i, v_{i+1});
// -inf encodes an empty interval.
struct NoiseProfile {
  double a = 0.0;                   // bound on |u_p(s; D)|
  std::vector<double> breakpoints;  // 0 = v_0 < v_1 < ... < v_n = c
  std::vector<double> log_counts;   // size n

  static NoiseProfile FromCounts(double a, std::vector<double> breakpoints,
                                 std::span<const std::uint64_t> counts);
  void Validate() const;
};

// c * sqrt(ln(2/delta) / (2m)).
double HoeffdingEpsSingle(double c, double m, double delta);
// c * sqrt(ln(2|I|/delta) / (2m)).
double HoeffdingEps(double c, double num_indices, double m, double delta);
// Same with ln|I| supplied directly, for games too large to count.
double HoeffdingEpsLog(double c, double log_num_indices, double m, double delta);

// sup_{i} |(1/m) sum_j sigma_j X_ij|.
double OneEra(const SampleTensor& samples, const RademacherSigns& sigma);

// 2r + 3c sqrt(ln(1/delta) / (2m)).
double EraEps(double one_era, double c, double m, double delta);

// c sqrt(ln|I| / (2m)) + c sqrt(ln(1/delta) / (2m)).
double RaEpsUpper(double c, double num_indices, double m, double delta);
double RaEpsUpperLog(double c, double log_num_indices, double m, double delta);

// Game size |I| above which the Rademacher bound can beat Hoeffding:
// 1 / (2 delta^8).
double CrossoverSize(double delta);

// a0/sqrt(m) + sum_i a_i min(1, sqrt(2 ln(b_i) / m)), with ln(b_i) given.
double FactoredRaBoundLog(double a0, std::span<const double> scales,
                          std::span<const double> log_cardinalities, double m);
double FactoredRaBound(double a0, std::span<const double> scales,
                       std::span<const std::uint64_t> cardinalities, double m);

// a/sqrt(m) + sum_i v_i min(1, sqrt(max(ln F_i, 0) / (2m))).
double NoiseScalingRaBound(const NoiseProfile& profile, double m);

// Monte-Carlo estimate of the Rademacher average: mean of OneEra over `draws`
// fresh (X, sigma) pairs. `sample` fills an |I| x m tensor for draw k from its
// derived seed. Draws may run on `threads` workers; the result equals the
// sequential evaluation bit for bit.
struct RaEstimate {
  double mean = 0.0;
  double std_error = 0.0;
};
using SampleFn = std::function<void(std::uint64_t seed, SampleTensor& out)>;
RaEstimate MonteCarloRa(const SampleFn& sample, std::size_t num_indices,
                        std::size_t m, std::uint64_t seed,
                        std::size_t draws = 500, unsigned threads = 1);

}  // namespace egta

#endif  // EGTA_BOUNDS_HPP_
