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

#include "egta/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "egta/algorithms.hpp"
#include "egta/bounds.hpp"
#include "egta/game.hpp"
#include "egta/parallel.hpp"
#include "egta/rng.hpp"
#include "egta/simulators.hpp"

namespace egta {
namespace {

using nlohmann::json;

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

// Reads parameters with defaults and rejects keys nobody asked for.
class Params {
 public:
  Params(const json& j, std::string_view experiment) : j_(j), name_(experiment) {
    if (!j_.is_null() && !j_.is_object())
      throw std::invalid_argument("experiment parameters must be a JSON object");
  }

  template <typename T>
  T Get(const std::string& key, T fallback) {
    used_.insert(key);
    if (j_.is_null() || !j_.contains(key)) return fallback;
    try {
      return j_.at(key).get<T>();
    } catch (const json::exception&) {
      throw std::invalid_argument(name_ + ": parameter '" + key + "' has the wrong type");
    }
  }

  void Finish() const {
    if (j_.is_null()) return;
    for (const auto& [key, value] : j_.items()) {
      if (!used_.count(key))
        throw std::invalid_argument(name_ + ": unknown parameter '" + key + "'");
    }
  }

 private:
  json j_;
  std::string name_;
  std::set<std::string> used_;
};

struct Common {
  std::uint64_t seed;
  unsigned threads;
};

Common ReadCommon(Params& p) {
  return {p.Get<std::uint64_t>("seed", 1),
          p.Get<unsigned>("threads", DefaultThreads())};
}

void RequireReps(long long reps) {
  if (reps < 1) throw std::invalid_argument("replication count must be >= 1");
}

void RequireDelta(double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("delta must lie in (0, 1)");
}

std::string ProfileLabel(const StrategyProfile& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '-';
    out += std::to_string(s[i]);
  }
  return out;
}

// ---------------------------------------------------------------------------

ExperimentOutput EpsVsSamples(Params& p) {
  const Common common = ReadCommon(p);
  const auto games = p.Get<long long>("reps", 200);
  const auto d_values = p.Get<std::vector<double>>("d_values", {2.0, 5.0, 10.0});
  const auto m_values = p.Get<std::vector<std::size_t>>(
      "m_values", {1000, 3162, 10000, 31623, 100000});
  const double delta = p.Get<double>("delta", 0.1);
  const int players = p.Get<int>("players", 5);
  const int facilities = p.Get<int>("facilities", 5);
  const int k = p.Get<int>("k", 2);
  const double alpha = p.Get<double>("alpha", 0.1);
  const BoundType bound = ParseBound(p.Get<std::string>("bound", "1era"));
  p.Finish();
  RequireReps(games);
  RequireDelta(delta);
  if (d_values.empty() || m_values.empty())
    throw std::invalid_argument("need at least one d and one m");

  const std::size_t nd = d_values.size(), nm = m_values.size();
  const auto ng = static_cast<std::size_t>(games);
  std::vector<double> eps(nd * nm * ng);
  ParallelFor(eps.size(), common.threads, [&](std::size_t task) {
    const std::size_t g = task % ng;
    const std::size_t mi = (task / ng) % nm;
    const std::size_t di = task / (ng * nm);
    const NormalFormGame game = Expand(GenerateCongestionGame(
        players, facilities, k, alpha, ReplicationSeed(common.seed, "eps-vs-samples/game", g)));
    const NoisySimulator sim(game, d_values[di]);
    const std::uint64_t run_seed =
        Hash({ReplicationSeed(common.seed, "eps-vs-samples", g), di, mi});
    eps[task] = GlobalSampling(sim, IndexSet::Full(game), m_values[mi], delta,
                               sim.range(), bound, run_seed)
                    .eps;
  });

  std::ostringstream out;
  out << "# experiment=eps-vs-samples\n# games=" << games << "\n# delta=" << Num(delta)
      << "\n# bound=" << BoundName(bound) << "\n# family=RC(" << players << ","
      << facilities << "," << k << ") alpha=" << Num(alpha) << "\n";
  std::ostringstream rows;
  rows << "d,m,mean_eps,ci_low,ci_high\n";
  for (std::size_t di = 0; di < nd; ++di) {
    std::vector<double> log_m, log_eps;
    for (std::size_t mi = 0; mi < nm; ++mi) {
      const auto first = eps.begin() + static_cast<std::ptrdiff_t>((di * nm + mi) * ng);
      const MeanCi ci = MeanWithCi(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(ng)));
      rows << Num(d_values[di]) << ',' << m_values[mi] << ',' << Num(ci.mean) << ','
           << Num(ci.low) << ',' << Num(ci.high) << '\n';
      log_m.push_back(std::log(static_cast<double>(m_values[mi])));
      log_eps.push_back(std::log(ci.mean));
    }
    if (nm >= 2)
      out << "# loglog_slope_d=" << Num(d_values[di]) << ":" << Num(OlsSlope(log_m, log_eps))
          << "\n";
  }
  return {out.str() + rows.str(), "csv"};
}

// ---------------------------------------------------------------------------

struct Fixture {
  std::uint64_t index;
  NormalFormGame game;
  std::vector<std::size_t> nash;
};

Fixture FindUniqueNashFixture(std::uint64_t master, int players, int facilities,
                              int k, double alpha, std::size_t profiles,
                              std::uint64_t limit) {
  for (std::uint64_t i = 0; i < limit; ++i) {
    const CongestionGame cg = GenerateCongestionGame(
        players, facilities, k, alpha, ReplicationSeed(master, "nash-frequency/fixture", i));
    std::size_t count = 1;
    for (const auto& list : cg.strategies) count *= list.size();
    if (count != profiles) continue;
    NormalFormGame game = Expand(cg);
    auto nash = PureEpsNash(game, 0.0);
    if (nash.size() == 1) return {i, std::move(game), std::move(nash)};
  }
  throw std::invalid_argument("no fixture game with a unique pure Nash found; re-seed");
}

ExperimentOutput NashFrequency(Params& p) {
  const Common common = ReadCommon(p);
  const auto reps = p.Get<long long>("reps", 200);
  const double d = p.Get<double>("noise_d", 2.0);
  const auto m_values = p.Get<std::vector<std::size_t>>("m_values", {50, 100, 200, 500});
  const double delta = p.Get<double>("delta", 0.1);
  const int players = p.Get<int>("players", 5);
  const int facilities = p.Get<int>("facilities", 5);
  const int k = p.Get<int>("k", 2);
  const double alpha = p.Get<double>("alpha", 0.1);
  const auto profiles = p.Get<std::size_t>("profiles", 32);
  const auto limit = p.Get<std::uint64_t>("search_limit", 50'000'000);
  const BoundType bound = ParseBound(p.Get<std::string>("bound", "1era"));
  p.Finish();
  RequireReps(reps);
  RequireDelta(delta);

  const Fixture fx =
      FindUniqueNashFixture(common.seed, players, facilities, k, alpha, profiles, limit);
  const NoisySimulator sim(fx.game, d);
  const IndexSet all = IndexSet::Full(fx.game);
  const auto nr = static_cast<std::size_t>(reps);
  const std::size_t np = fx.game.num_profiles();
  // flagged[(mi * reps + r) * np + s]
  std::vector<char> flagged(m_values.size() * nr * np, 0);
  ParallelFor(m_values.size() * nr, common.threads, [&](std::size_t task) {
    const std::size_t r = task % nr, mi = task / nr;
    const GsResult gs = GlobalSampling(
        sim, all, m_values[mi], delta, sim.range(), bound,
        Hash({ReplicationSeed(common.seed, "nash-frequency", r), mi}));
    const NormalFormGame estimate = Scatter(fx.game, all, gs.utilities);
    for (std::size_t s : PureEpsNash(estimate, 2.0 * gs.eps)) flagged[task * np + s] = 1;
  });

  std::ostringstream out;
  out << "# experiment=nash-frequency\n# runs_per_m=" << reps
      << "\n# fixture_index=" << fx.index << "\n# profiles=" << np
      << "\n# true_nash=" << ProfileLabel(fx.game.DecodeProfile(fx.nash.front()))
      << "\n# noise_d=" << Num(d) << "\n# delta=" << Num(delta)
      << "\n# bound=" << BoundName(bound) << "\n";
  out << "m,profile_id,profile,count,frequency,true_nash\n";
  for (std::size_t mi = 0; mi < m_values.size(); ++mi) {
    for (std::size_t s = 0; s < np; ++s) {
      std::size_t count = 0;
      for (std::size_t r = 0; r < nr; ++r) count += flagged[(mi * nr + r) * np + s];
      if (count == 0) continue;
      out << m_values[mi] << ',' << s << ',' << ProfileLabel(fx.game.DecodeProfile(s))
          << ',' << count << ',' << Num(static_cast<double>(count) / static_cast<double>(nr))
          << ',' << (s == fx.nash.front() ? 1 : 0) << '\n';
    }
  }
  return {out.str(), "csv"};
}

// ---------------------------------------------------------------------------

ExperimentOutput SuccessRate(Params& p) {
  const Common common = ReadCommon(p);
  const auto reps = p.Get<long long>("reps", 200);
  const double d = p.Get<double>("noise_d", 5.0);
  const auto deltas = p.Get<std::vector<double>>("deltas", {0.05, 0.1, 0.15, 0.2, 0.25});
  const auto rhos = p.Get<std::vector<double>>("rhos", {1.0, 0.875, 0.75, 0.625, 0.5});
  const auto m = p.Get<std::size_t>("m", 1000);
  const auto families = p.Get<std::vector<std::string>>("families", {"rc", "rg"});
  const auto bound_names =
      p.Get<std::vector<std::string>>("bounds", {"hoeffding", "1era"});
  const int players = p.Get<int>("players", 3);
  const int k = p.Get<int>("k", 3);
  const int facilities = p.Get<int>("facilities", 3);
  const int rc_k = p.Get<int>("rc_k", 2);
  const double alpha = p.Get<double>("alpha", 0.1);
  const double u0 = p.Get<double>("u0", 10.0);
  p.Finish();
  RequireReps(reps);
  for (double delta : deltas) RequireDelta(delta);
  std::vector<BoundType> bounds;
  for (const auto& b : bound_names) bounds.push_back(ParseBound(b));
  for (const auto& f : families) {
    if (f != "rc" && f != "rg") throw std::invalid_argument("family must be rc or rg");
  }

  const auto nr = static_cast<std::size_t>(reps);
  const std::size_t nf = families.size(), nb = bounds.size(), ndl = deltas.size(),
                    nrho = rhos.size();
  // ok[((((f * nb + b) * ndl + dl) * nrho + rho) * nr + r]
  std::vector<char> ok(nf * nb * ndl * nrho * nr, 0);
  ParallelFor(nf * nr, common.threads, [&](std::size_t task) {
    const std::size_t r = task % nr, f = task / nr;
    const std::uint64_t rep_seed = ReplicationSeed(common.seed, "success-rate/" + families[f], r);
    NormalFormGame truth;
    std::optional<double> range;
    if (families[f] == "rg") {
      truth = GenerateRandomGame(players, k, u0, rep_seed);
      range = u0 + d;
    } else {
      truth = Expand(GenerateCongestionGame(players, facilities, rc_k, alpha, rep_seed));
    }
    const NoisySimulator sim(truth, d, range);
    const IndexSet all = IndexSet::Full(truth);
    const auto nash_truth = PureEpsNash(truth, 0.0);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t dl = 0; dl < ndl; ++dl) {
        const GsResult gs = GlobalSampling(sim, all, m, deltas[dl], sim.range(), bounds[b],
                                           Hash({rep_seed, b, dl}));
        const NormalFormGame estimate = Scatter(truth, all, gs.utilities);
        for (std::size_t q = 0; q < nrho; ++q) {
          const double e = rhos[q] * gs.eps;
          const auto middle = PureEpsNash(estimate, 2.0 * e);
          const auto outer = PureEpsNash(truth, 4.0 * e);
          const bool success =
              std::includes(middle.begin(), middle.end(), nash_truth.begin(), nash_truth.end()) &&
              std::includes(outer.begin(), outer.end(), middle.begin(), middle.end());
          ok[((((f * nb + b) * ndl + dl) * nrho + q) * nr) + r] = success;
        }
      }
    }
  });

  std::ostringstream out;
  out << "# experiment=success-rate\n# reps=" << reps << "\n# m=" << m
      << "\n# noise_d=" << Num(d) << "\n# delta_grid=default-not-from-source\n"
      << "# ci=normal-approximation\n";
  out << "family,bound,delta,rho,successes,reps,success_rate,ci_low,ci_high\n";
  for (std::size_t f = 0; f < nf; ++f) {
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t dl = 0; dl < ndl; ++dl) {
        for (std::size_t q = 0; q < nrho; ++q) {
          std::size_t wins = 0;
          for (std::size_t r = 0; r < nr; ++r)
            wins += ok[((((f * nb + b) * ndl + dl) * nrho + q) * nr) + r];
          const MeanCi ci = ProportionWithCi(wins, nr);
          out << families[f] << ',' << BoundName(bounds[b]) << ',' << Num(deltas[dl]) << ','
              << Num(rhos[q]) << ',' << wins << ',' << reps << ',' << Num(ci.mean) << ','
              << Num(ci.low) << ',' << Num(ci.high) << '\n';
        }
      }
    }
  }
  return {out.str(), "csv"};
}

// ---------------------------------------------------------------------------

ExperimentOutput GsVsPsp(Params& p) {
  const Common common = ReadCommon(p);
  const auto reps = p.Get<long long>("reps", 10);
  const auto player_values = p.Get<std::vector<int>>("players", {2, 3, 4, 5});
  const auto k_values = p.Get<std::vector<int>>("k", {2, 3, 4, 5});
  const double d = p.Get<double>("noise_d", 5.0);
  const double delta = p.Get<double>("delta", 0.1);
  const auto m0 = p.Get<std::size_t>("m0", 100);
  const auto budget = p.Get<std::size_t>("budget", 102400);
  const double u0 = p.Get<double>("u0", 10.0);
  const BoundType bound = ParseBound(p.Get<std::string>("bound", "hoeffding"));
  p.Finish();
  RequireReps(reps);
  RequireDelta(delta);
  const SamplingSchedule schedule = SamplingSchedule::FiniteDoubling(m0, budget);
  if (*schedule.length() == 0) throw std::invalid_argument("budget below m0");
  const FailureSchedule failure = FailureSchedule::UniformSplit(delta, *schedule.length());

  struct Row {
    int players, k;
    std::size_t size;
    double eps_psp, eps_gs;
    std::uint64_t cost_psp, m_gs;
    std::size_t iterations;
  };
  std::vector<std::pair<int, int>> classes;
  for (int np : player_values)
    for (int k : k_values) classes.emplace_back(np, k);
  const auto nr = static_cast<std::size_t>(reps);
  std::vector<Row> rows(classes.size() * nr);
  ParallelFor(rows.size(), common.threads, [&](std::size_t task) {
    const auto [np, k] = classes[task / nr];
    const std::size_t r = task % nr;
    const std::uint64_t rep_seed = Hash(
        {ReplicationSeed(common.seed, "gs-vs-psp", r), static_cast<std::uint64_t>(np),
         static_cast<std::uint64_t>(k)});
    const NormalFormGame truth = GenerateRandomGame(np, k, u0, rep_seed);
    const NoisySimulator sim(truth, d, u0 + d);
    const PspResult psp = ProgressiveSampling(sim, schedule, failure, sim.range(), bound,
                                              /*pure=*/true, /*eps=*/0.0, Hash({rep_seed, 1}));
    const std::uint64_t cost = QueryCost(psp.trace);
    const std::uint64_t m_gs = cost / truth.size();
    double eps_gs;
    if (bound == BoundType::kHoeffding) {
      eps_gs = HoeffdingEps(sim.range(), static_cast<double>(truth.size()),
                            static_cast<double>(m_gs), delta);
    } else {
      eps_gs = GlobalSampling(sim, IndexSet::Full(truth), m_gs, delta, sim.range(), bound,
                              Hash({rep_seed, 2}))
                   .eps;
    }
    rows[task] = {np, k, truth.size(), psp.eps, eps_gs, cost, m_gs, psp.trace.size()};
  });

  std::ostringstream out;
  out << "# experiment=gs-vs-psp\n# reps_per_class=" << reps << "\n# noise_d=" << Num(d)
      << "\n# delta=" << Num(delta) << "\n# schedule=doubling m0=" << m0
      << " budget=" << budget << "\n# bound=" << BoundName(bound) << "\n";
  out << "players,k,game_size,rep,eps_psp,eps_gs,query_cost_psp,m_gs,query_cost_gs,iterations\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Row& row = rows[i];
    out << row.players << ',' << row.k << ',' << row.size << ',' << i % nr << ','
        << Num(row.eps_psp) << ',' << Num(row.eps_gs) << ',' << row.cost_psp << ','
        << row.m_gs << ',' << row.m_gs * row.size << ',' << row.iterations << '\n';
  }
  return {out.str(), "csv"};
}

// ---------------------------------------------------------------------------

template <typename Curve>
void AppendCrossover(std::ostringstream& meta, const std::vector<int>& xs, Curve&& diff) {
  std::vector<int> changes;
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if ((diff(i - 1) > 0.0) != (diff(i) > 0.0)) changes.push_back(xs[i]);
  }
  meta << "# sign_changes=" << changes.size() << "\n";
  if (!changes.empty()) meta << "# crossover_players=" << changes.front() << "\n";
}

ExperimentOutput BoundCompareFactored(Params& p) {
  const int max_players = p.Get<int>("players_max", 100);
  const double strategies = p.Get<double>("strategies", 100.0);
  const double m = p.Get<double>("m", 10000.0);
  const double delta = p.Get<double>("delta", 0.05);
  const double c = p.Get<double>("c", 10.0);
  const double a0 = p.Get<double>("a0", 1.0);
  const auto scales = p.Get<std::vector<double>>("scales", {1.0, 1.0, 1.0, 0.5, 0.5});
  p.Finish();
  RequireDelta(delta);
  if (scales.size() != 5) throw std::invalid_argument("factored game has 5 factor scales");
  if (max_players < 1) throw std::invalid_argument("players_max must be >= 1");

  std::vector<int> xs;
  std::vector<double> hoeffding, rademacher;
  const double log_s = std::log(strategies);
  for (int np = 1; np <= max_players; ++np) {
    const double log_p = std::log(static_cast<double>(np));
    const double log_index = log_p + np * log_s;
    const std::vector<double> log_b{0.0, log_p, log_s, np * log_s, log_index};
    xs.push_back(np);
    hoeffding.push_back(HoeffdingEpsLog(c, log_index, m, delta));
    rademacher.push_back(2.0 * FactoredRaBoundLog(a0, scales, log_b, m) +
                         3.0 * c * std::sqrt(-std::log(delta) / (2.0 * m)));
  }
  std::ostringstream out;
  out << "# experiment=bound-compare-factored\n# strategies=" << Num(strategies)
      << "\n# m=" << Num(m) << "\n# delta=" << Num(delta) << "\n# c=" << Num(c) << "\n";
  AppendCrossover(out, xs, [&](std::size_t i) { return hoeffding[i] - rademacher[i]; });
  out << "players,hoeffding,rademacher\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << xs[i] << ',' << Num(hoeffding[i]) << ',' << Num(rademacher[i]) << '\n';
  return {out.str(), "csv"};
}

}  // namespace

// Dyadic variable-noise profile: N = |P||S|^|P| indices, n = ceil(log2 N)
// intervals with v_i = c 2^(i-n) and F(v_{i-1}, v_i) = ceil(N / 2^i).
NoiseProfile DyadicNoiseProfile(double a, double c, double log_num_indices) {
  const double ln2 = std::log(2.0);
  const auto n = std::max<long long>(1, static_cast<long long>(std::ceil(log_num_indices / ln2)));
  NoiseProfile profile;
  profile.a = a;
  profile.breakpoints.push_back(0.0);
  for (long long i = 1; i <= n; ++i) {
    profile.breakpoints.push_back(c * std::pow(2.0, static_cast<double>(i - n)));
    const double log_ratio = log_num_indices - static_cast<double>(i) * ln2;
    // Below e^40 the ceiling is still visible in double precision.
    // The relative nudge keeps exact quotients such as 10 / 2 from rounding up.
    profile.log_counts.push_back(
        log_ratio < 40.0 ? std::log(std::ceil(std::exp(log_ratio) * (1.0 - 1e-12)))
                         : log_ratio);
  }
  return profile;
}

namespace {

ExperimentOutput BoundCompareVns(Params& p) {
  const int max_players = p.Get<int>("players_max", 100);
  const double strategies = p.Get<double>("strategies", 100.0);
  const double m = p.Get<double>("m", 10000.0);
  const double delta = p.Get<double>("delta", 0.05);
  const double a = p.Get<double>("a", 1.0);
  const double c = p.Get<double>("c", 2.0);
  p.Finish();
  RequireDelta(delta);
  if (max_players < 1) throw std::invalid_argument("players_max must be >= 1");

  std::vector<int> xs;
  std::vector<double> hoeffding, rademacher;
  for (int np = 1; np <= max_players; ++np) {
    const double log_index = std::log(static_cast<double>(np)) + np * std::log(strategies);
    xs.push_back(np);
    hoeffding.push_back(HoeffdingEpsLog(c, log_index, m, delta));
    rademacher.push_back(2.0 * NoiseScalingRaBound(DyadicNoiseProfile(a, c, log_index), m) +
                         3.0 * c * std::sqrt(-std::log(delta) / (2.0 * m)));
  }
  std::ostringstream out;
  out << "# experiment=bound-compare-vns\n# strategies=" << Num(strategies) << "\n# m=" << Num(m)
      << "\n# delta=" << Num(delta) << "\n# a=" << Num(a) << "\n# c=" << Num(c) << "\n";
  AppendCrossover(out, xs, [&](std::size_t i) { return hoeffding[i] - rademacher[i]; });
  out << "players,hoeffding,rademacher\n";
  for (std::size_t i = 0; i < xs.size(); ++i)
    out << xs[i] << ',' << Num(hoeffding[i]) << ',' << Num(rademacher[i]) << '\n';
  return {out.str(), "csv"};
}

ExperimentOutput PpaDemo(Params& p) {
  p.Finish();
  const CongestionGame cg = PpaExampleGame();
  const NormalFormGame game = Expand(cg);
  const PpaReport report = PriceOfAnarchy(cg);
  auto label = [&](std::size_t s) {
    std::string out = "(";
    for (int q = 0; q < game.num_players(); ++q) {
      if (q) out += ',';
      out += (game.StrategyOf(s, q) == 0 ? "A" : "B") + std::to_string(q + 1);
    }
    return out + ")";
  };
  std::ostringstream out;
  out << "congestion game: 3 players, 6 facilities, f_e(n) = n\n";
  out << "pure nash equilibria: " << report.equilibria.size() << "\n";
  for (std::size_t s : report.equilibria)
    out << "  " << label(s) << " cost " << Num(-Welfare(game, s)) << "\n";
  out << "optimum profile: " << label(report.optimum_profile) << "\n";
  out << "optimum cost: " << Num(report.optimum_cost) << "\n";
  out << "worst equilibrium cost: " << Num(report.worst_equilibrium_cost) << "\n";
  out << "ppa: " << Num(report.ppa) << "\n";
  return {out.str(), "text"};
}

struct Entry {
  const char* name;
  ExperimentOutput (*run)(Params&);
  const char* help;
};

const Entry kExperiments[] = {
    {"eps-vs-samples", EpsVsSamples,
     "GS error vs sample size on RC games.\n"
     "params: seed=1 reps=200 d_values=[2,5,10] m_values=[1000,3162,10000,31623,100000]\n"
     "        delta=0.1 players=5 facilities=5 k=2 alpha=0.1 bound=1era threads\n"
     "csv: d,m,mean_eps,ci_low,ci_high  (meta: loglog_slope_d=<d>:<slope>)"},
    {"nash-frequency", NashFrequency,
     "How often each profile is flagged as a pure 2eps-Nash of the empirical game.\n"
     "params: seed=1 reps=200 noise_d=2 m_values=[50,100,200,500] delta=0.1 players=5\n"
     "        facilities=5 k=2 alpha=0.1 profiles=32 search_limit bound=1era threads\n"
     "csv: m,profile_id,profile,count,frequency,true_nash  (zero-count rows omitted)"},
    {"success-rate", SuccessRate,
     "Rate at which Nash(G) c Nash_2re(G^) c Nash_4re(G) holds.\n"
     "params: seed=1 reps=200 noise_d=5 deltas=[.05,.1,.15,.2,.25] rhos=[1,.875,.75,.625,.5]\n"
     "        m=1000 families=[rc,rg] bounds=[hoeffding,1era] players=3 k=3 facilities=3\n"
     "        rc_k=2 alpha=0.1 u0=10 threads\n"
     "csv: family,bound,delta,rho,successes,reps,success_rate,ci_low,ci_high"},
    {"gs-vs-psp", GsVsPsp,
     "PSP (eps=0, doubling schedule) vs GS at the same total query budget on RG games.\n"
     "params: seed=1 reps=10 players=[2,3,4,5] k=[2,3,4,5] noise_d=5 delta=0.1 m0=100\n"
     "        budget=102400 u0=10 bound=hoeffding threads\n"
     "csv: players,k,game_size,rep,eps_psp,eps_gs,query_cost_psp,m_gs,query_cost_gs,iterations"},
    {"bound-compare-factored", BoundCompareFactored,
     "Hoeffding vs factored-noise Rademacher bound as |P| grows.\n"
     "params: players_max=100 strategies=100 m=10000 delta=0.05 c=10 a0=1 scales=[1,1,1,.5,.5]\n"
     "csv: players,hoeffding,rademacher  (meta: sign_changes, crossover_players)"},
    {"bound-compare-vns", BoundCompareVns,
     "Hoeffding vs variable-scale-noise Rademacher bound as |P| grows.\n"
     "params: players_max=100 strategies=100 m=10000 delta=0.05 a=1 c=2\n"
     "csv: players,hoeffding,rademacher  (meta: sign_changes, crossover_players)"},
    {"ppa-demo", PpaDemo,
     "Exact pure price of anarchy of the 3-player, 6-facility example.\n"
     "params: none\noutput: text report"},
};

const Entry& Find(std::string_view name) {
  for (const Entry& e : kExperiments) {
    if (name == e.name) return e;
  }
  throw std::invalid_argument("unknown experiment '" + std::string(name) + "'");
}

}  // namespace

std::vector<std::string> ExperimentNames() {
  std::vector<std::string> names;
  for (const Entry& e : kExperiments) names.emplace_back(e.name);
  return names;
}

std::string ExperimentHelp(std::string_view name) { return Find(name).help; }

ExperimentOutput RunExperiment(std::string_view name, const json& params) {
  const Entry& entry = Find(name);
  Params p(params, name);
  return entry.run(p);
}

std::uint64_t ReplicationSeed(std::uint64_t master, std::string_view experiment,
                              std::uint64_t replication) {
  return Hash({master, HashString(experiment), replication});
}

MeanCi MeanWithCi(const std::vector<double>& values) {
  if (values.empty()) throw std::invalid_argument("no values");
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  const double se = values.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
  return {mean, mean - 1.96 * se, mean + 1.96 * se};
}

MeanCi ProportionWithCi(std::size_t successes, std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("no trials");
  const double n = static_cast<double>(trials);
  const double rate = static_cast<double>(successes) / n;
  const double se = std::sqrt(rate * (1.0 - rate) / n);
  return {rate, rate - 1.96 * se, rate + 1.96 * se};
}

double OlsSlope(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope needs >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace egta
