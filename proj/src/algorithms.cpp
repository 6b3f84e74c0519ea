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

#include "egta/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "egta/bounds.hpp"
#include "egta/rng.hpp"

namespace egta {
namespace {

constexpr std::uint64_t kConditionStream = 0x636f6e64ULL;
constexpr std::uint64_t kSignStream = 0x7369676eULL;
constexpr std::uint64_t kIterationStream = 0x69746572ULL;
// Doubling past this would overflow std::size_t long before it mattered.
constexpr std::size_t kMaxIterations = 62;

}  // namespace

std::string_view BoundName(BoundType bound) {
  return bound == BoundType::kHoeffding ? "hoeffding" : "1era";
}

BoundType ParseBound(std::string_view name) {
  if (name == "hoeffding") return BoundType::kHoeffding;
  if (name == "1era" || name == "1-era" || name == "era") return BoundType::kOneEra;
  throw std::invalid_argument("unknown bound type '" + std::string(name) + "'");
}

SamplingSchedule SamplingSchedule::FiniteDoubling(std::size_t m0,
                                                  std::size_t budget) {
  if (m0 < 1) throw std::invalid_argument("m0 must be >= 1");
  SamplingSchedule s;
  s.m0_ = m0;
  for (std::size_t m = m0; m <= budget && s.sizes_.size() < kMaxIterations; m *= 2)
    s.sizes_.push_back(m);
  return s;
}

SamplingSchedule SamplingSchedule::InfiniteDoubling(std::size_t m0) {
  if (m0 < 1) throw std::invalid_argument("m0 must be >= 1");
  SamplingSchedule s;
  s.m0_ = m0;
  s.infinite_ = true;
  return s;
}

SamplingSchedule SamplingSchedule::Explicit(std::vector<std::size_t> sizes) {
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1 || (i > 0 && sizes[i] <= sizes[i - 1]))
      throw std::invalid_argument("sampling schedule must strictly increase from >= 1");
  }
  SamplingSchedule s;
  s.sizes_ = std::move(sizes);
  s.m0_ = s.sizes_.empty() ? 0 : s.sizes_.front();
  return s;
}

std::optional<std::size_t> SamplingSchedule::length() const {
  if (infinite_) return std::nullopt;
  return sizes_.size();
}

std::size_t SamplingSchedule::at(std::size_t t) const {
  if (infinite_) {
    if (t >= kMaxIterations) throw std::out_of_range("sampling schedule overflow");
    return m0_ << t;
  }
  return sizes_.at(t);
}

FailureSchedule FailureSchedule::UniformSplit(double delta, std::size_t iterations) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (iterations < 1) throw std::invalid_argument("need >= 1 iteration");
  FailureSchedule f;
  f.delta_ = delta;
  f.iterations_ = iterations;
  return f;
}

FailureSchedule FailureSchedule::GeometricHalving(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  FailureSchedule f;
  f.delta_ = delta;
  return f;
}

std::optional<std::size_t> FailureSchedule::length() const {
  if (iterations_ == 0) return std::nullopt;
  return iterations_;
}

double FailureSchedule::at(std::size_t t) const {
  if (iterations_ != 0) {
    if (t >= iterations_) throw std::out_of_range("failure schedule exhausted");
    return delta_ / static_cast<double>(iterations_);
  }
  return std::ldexp(delta_, -static_cast<int>(t + 1));
}

GsResult GlobalSampling(const ConditionalSimulator& sim, const IndexSet& indices,
                        std::size_t m, double delta, double c, BoundType bound,
                        std::uint64_t seed) {
  if (indices.empty()) throw std::invalid_argument("GS needs a nonempty index set");
  if (m < 1) throw std::invalid_argument("GS needs m >= 1");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
  if (!(c > 0.0)) throw std::invalid_argument("range c must be positive");

  // Running means, so constant samples reproduce their value exactly. The
  // 1-ERA is taken over samples shifted into [-c/2, c/2].
  const std::size_t n = indices.size();
  const double center = sim.center();
  std::vector<double> means(n, 0.0);
  std::vector<double> signed_sums(bound == BoundType::kOneEra ? n : 0, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    const Condition x{Hash({seed, kConditionStream, j})};
    const double w = 1.0 / static_cast<double>(j + 1);
    if (bound == BoundType::kOneEra) {
      const double sigma = RademacherSign(Hash({seed, kSignStream, j}));
      for (std::size_t k = 0; k < n; ++k) {
        const double v = sim.Query(x, indices[k].player, indices[k].profile);
        means[k] += (v - means[k]) * w;
        signed_sums[k] += sigma * (v - center);
      }
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = sim.Query(x, indices[k].player, indices[k].profile);
        means[k] += (v - means[k]) * w;
      }
    }
  }

  GsResult result{indices, std::move(means), 0.0, m, delta, bound, 0.0};
  const double md = static_cast<double>(m);
  if (bound == BoundType::kOneEra) {
    for (double s : signed_sums) result.one_era = std::max(result.one_era, std::abs(s) / md);
    result.eps = EraEps(result.one_era, c, md, delta);
  } else {
    result.eps = HoeffdingEps(c, static_cast<double>(n), md, delta);
  }
  return result;
}

StrategySets PresentStrategies(const NormalFormGame& shape,
                               const IndexSet& indices) {
  std::vector<std::vector<bool>> seen(shape.num_players());
  for (int p = 0; p < shape.num_players(); ++p)
    seen[p].assign(shape.num_strategies(p), false);
  for (const Index& i : indices) {
    for (int q = 0; q < shape.num_players(); ++q)
      seen[q][shape.StrategyOf(i.profile, q)] = true;
  }
  StrategySets out(shape.num_players());
  for (int p = 0; p < shape.num_players(); ++p) {
    for (int s = 0; s < shape.num_strategies(p); ++s) {
      if (seen[p][s]) out[p].push_back(s);
    }
  }
  return out;
}

IndexSet PrunePure(const NormalFormGame& estimates, const IndexSet& indices,
                   double eps_hat) {
  std::vector<Index> kept;
  for (const Index& i : indices) {
    const double own = estimates(i);
    double best = own;
    for (int s = 0; s < estimates.num_strategies(i.player); ++s) {
      const Index dev{i.player, estimates.Deviate(i.profile, i.player, s)};
      if (indices.contains(dev)) best = std::max(best, estimates(dev));
    }
    if (best - own <= 2.0 * eps_hat) kept.push_back(i);
  }
  return IndexSet(estimates, std::move(kept));
}

IndexSet PruneMixed(const NormalFormGame& estimates, const IndexSet& indices,
                    double eps_hat) {
  if (indices.empty()) return indices;
  const StrategySets alive =
      Rationalizable(estimates, 2.0 * eps_hat, PresentStrategies(estimates, indices));
  std::vector<std::vector<bool>> ok(estimates.num_players());
  for (int p = 0; p < estimates.num_players(); ++p) {
    ok[p].assign(estimates.num_strategies(p), false);
    for (int s : alive[p]) ok[p][s] = true;
  }
  std::vector<Index> kept;
  for (const Index& i : indices) {
    bool keep = true;
    for (int q = 0; q < estimates.num_players() && keep; ++q)
      keep = ok[q][estimates.StrategyOf(i.profile, q)];
    if (keep) kept.push_back(i);
  }
  return IndexSet(estimates, std::move(kept));
}

PspResult ProgressiveSampling(const ConditionalSimulator& sim,
                              const SamplingSchedule& sampling,
                              const FailureSchedule& failure, double c,
                              BoundType bound, bool pure, double eps_target,
                              std::uint64_t seed) {
  if (!(eps_target >= 0.0)) throw std::invalid_argument("eps must be >= 0");
  if (!(c > 0.0)) throw std::invalid_argument("range c must be positive");
  const auto steps = sampling.length();
  if (steps && *steps == 0)
    throw std::invalid_argument("sampling budget admits no iteration");
  if (!steps && eps_target <= 0.0)
    throw std::invalid_argument("an infinite schedule needs eps > 0 to terminate");
  const auto failure_steps = failure.length();
  if (failure_steps && (!steps || *failure_steps < *steps))
    throw std::invalid_argument("failure schedule shorter than sampling schedule");

  const NormalFormGame& shape = sim.base();
  PspResult result;
  result.pure = pure;
  result.utilities = NormalFormGame::Zeros(
      std::vector<int>(shape.strategy_counts().begin(), shape.strategy_counts().end()));
  result.radii.assign(shape.size(), c / 2.0);
  IndexSet active = IndexSet::Full(shape);

  for (std::size_t t = 0;; ++t) {
    const std::size_t m = sampling.at(t);
    const double delta_t = failure.at(t);
    const GsResult gs = GlobalSampling(sim, active, m, delta_t, c, bound,
                                       Hash({seed, kIterationStream, t}));
    result.utilities = Scatter(result.utilities, active, gs.utilities);
    for (const Index& i : active) result.radii[shape.FlatIndex(i)] = gs.eps;
    result.delta += delta_t;
    result.eps = gs.eps;
    result.trace.push_back({t + 1, m, active.size(), gs.eps, delta_t});

    const bool last = steps && t + 1 == *steps;
    if (gs.eps <= eps_target || last) break;
    active = pure ? PrunePure(result.utilities, active, gs.eps)
                  : PruneMixed(result.utilities, active, gs.eps);
  }

  const double tolerance = 2.0 * result.eps;
  if (pure) {
    const IndexSet survivors = PrunePure(result.utilities, active, result.eps);
    for (std::size_t s = 0; s < shape.num_profiles(); ++s) {
      bool stable = true;
      for (int p = 0; p < shape.num_players() && stable; ++p)
        stable = survivors.contains({p, s});
      if (stable) result.equilibria.push_back(s);
    }
  } else {
    result.surviving_strategies = Rationalizable(
        result.utilities, tolerance, PresentStrategies(shape, active));
  }
  result.final_indices = std::move(active);
  return result;
}

std::uint64_t QueryCost(const std::vector<PspIteration>& trace) {
  std::uint64_t total = 0;
  for (const auto& it : trace)
    total += static_cast<std::uint64_t>(it.m) * it.num_indices;
  return total;
}

}  // namespace egta
