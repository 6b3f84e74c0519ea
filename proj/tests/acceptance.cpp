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

// Acceptance runner: one PASS/FAIL line per criterion. Exit status 0 only if
// every criterion passes. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "egta/algorithms.hpp"
#include "egta/bounds.hpp"
#include "egta/experiments.hpp"
#include "egta/game.hpp"
#include "egta/rng.hpp"
#include "egta/simulators.hpp"
#include "hp_oracle.hpp"
#include "oracles.hpp"

using nlohmann::json;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));
std::string Fmt(const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof buf, format, args);
  va_end(args);
  return buf;
}

struct Csv {
  std::map<std::string, std::string> meta;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t Col(const std::string& name) const {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) throw std::runtime_error("missing column " + name);
    return static_cast<std::size_t>(it - header.begin());
  }
};

std::vector<std::string> Split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, sep)) out.push_back(field);
  return out;
}

Csv ParseCsv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      csv.meta[line.substr(2, eq - 2) + (line.compare(2, 14, "loglog_slope_d") == 0
                                             ? line.substr(eq, line.find(':') - eq)
                                             : "")] = line.substr(eq + 1);
    } else if (csv.header.empty()) {
      csv.header = Split(line, ',');
    } else {
      csv.rows.push_back(Split(line, ','));
    }
  }
  return csv;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

Verdict PpaOracle() {
  const auto out = egta::RunExperiment("ppa-demo", json::object()).text;
  const auto report = egta::PriceOfAnarchy(egta::PpaExampleGame());
  const bool text_ok = out.find("optimum cost: 6\n") != std::string::npos &&
                       out.find("worst equilibrium cost: 15\n") != std::string::npos &&
                       out.find("ppa: 2.5\n") != std::string::npos;
  return {text_ok && report.optimum_cost == 6 && report.worst_equilibrium_cost == 15 &&
              report.ppa == 2.5,
          Fmt("optimum=%g worst=%g ppa=%.17g", report.optimum_cost,
              report.worst_equilibrium_cost, report.ppa)};
}

Verdict Crossover() {
  const double v = egta::CrossoverSize(0.1);
  return {v == 5.0e7, Fmt("crossover_size(0.1)=%.17g", v)};
}

Verdict Containment() {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> eps_dist(0.01, 2.0);
  int held = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    // Alternate continuous and integer games; the latter have ties.
    const auto g = t % 2 ? oracle::RandomGame(rng, 3, 3, 5.0)
                         : oracle::RandomIntegerGame(rng, 3, 3, 3);
    const double eps = eps_dist(rng);
    const auto h = oracle::Perturb(rng, g, eps);
    held += egta::CheckContainment(g, h, eps) ? 1 : 0;
  }
  return {held == trials, Fmt("%d/%d", held, trials)};
}

Verdict GsGuarantee() {
  const int reps = 200;
  const double delta = 0.1;
  std::string detail;
  bool pass = true;
  for (egta::BoundType bound : {egta::BoundType::kHoeffding, egta::BoundType::kOneEra}) {
    int ok = 0;
    for (int rep = 0; rep < reps; ++rep) {
      const std::uint64_t seed = egta::ReplicationSeed(1, "acceptance/gs-guarantee", rep);
      const auto base = egta::Expand(egta::GenerateCongestionGame(3, 3, 2, 0.1, seed));
      const egta::NoisySimulator sim(base, 5.0);
      const auto all = egta::IndexSet::Full(base);
      const auto r = egta::GlobalSampling(sim, all, 1000, delta, sim.range(), bound,
                                          egta::Hash({seed, 1}));
      double worst = 0;
      for (std::size_t k = 0; k < all.size(); ++k)
        worst = std::max(worst, std::abs(r.utilities[k] - base(all[k])));
      ok += worst <= r.eps ? 1 : 0;
    }
    const double rate = static_cast<double>(ok) / reps;
    pass = pass && rate >= 1 - delta;
    detail += Fmt("%s%s=%d/%d", detail.empty() ? "" : " ",
                  std::string(egta::BoundName(bound)).c_str(), ok, reps);
  }
  return {pass, detail};
}

Verdict EpsDecay() {
  const auto csv = ParseCsv(egta::RunExperiment("eps-vs-samples", {{"reps", 50}}).text);
  bool pass = true;
  std::string detail;
  int found = 0;
  for (const auto& [key, value] : csv.meta) {
    if (key.rfind("loglog_slope_d", 0) != 0) continue;
    const auto parts = Split(value, ':');
    const double slope = std::stod(parts.at(1));
    pass = pass && slope >= -0.6 && slope <= -0.4;
    detail += Fmt("%sd=%s:%.4f", detail.empty() ? "" : " ", parts[0].c_str(), slope);
    ++found;
  }
  return {pass && found > 0, "slopes " + detail};
}

Verdict NashFrequency() {
  const int reps = 200;
  const auto csv = ParseCsv(
      egta::RunExperiment("nash-frequency", {{"reps", reps}, {"m_values", {50, 500}}}).text);
  const auto cm = csv.Col("m"), cc = csv.Col("count"), ct = csv.Col("true_nash");
  std::map<long, long> true_hits, false_hits;
  for (const auto& row : csv.rows) {
    const long m = std::stol(row[cm]);
    const long count = std::stol(row[cc]);
    (row[ct] == "1" ? true_hits : false_hits)[m] += count;
  }
  const bool pass = true_hits[50] == reps && true_hits[500] == reps &&
                    false_hits[500] < false_hits[50];
  return {pass, Fmt("true_nash m50=%ld m500=%ld; false positives m50=%ld m500=%ld",
                    true_hits[50], true_hits[500], false_hits[50], false_hits[500])};
}

Verdict GsVsPsp() {
  const auto csv = ParseCsv(
      egta::RunExperiment("gs-vs-psp", {{"reps", 50}, {"players", {4}}, {"k", {3, 4}}}).text);
  const auto cs = csv.Col("game_size"), cp = csv.Col("eps_psp"), cg = csv.Col("eps_gs");
  const auto cq = csv.Col("query_cost_psp"), cb = csv.Col("query_cost_gs");
  std::map<long, std::vector<double>> psp, gs;
  bool fair = true;
  for (const auto& row : csv.rows) {
    const long size = std::stol(row[cs]);
    psp[size].push_back(std::stod(row[cp]));
    gs[size].push_back(std::stod(row[cg]));
    fair = fair && std::stod(row[cb]) <= std::stod(row[cq]);
  }
  bool pass = fair && psp.size() == 2;
  std::string detail;
  for (const auto& [size, values] : psp) {
    const double mp = Median(values), mg = Median(gs[size]);
    pass = pass && values.size() == 50 && mp < mg;
    detail += Fmt("%ssize=%ld psp=%.4f gs=%.4f", detail.empty() ? "" : "; ", size, mp, mg);
  }
  return {pass, "medians " + detail + (fair ? "" : " (GS exceeded PSP budget)")};
}

Verdict FactoredCrossover() {
  const auto csv = ParseCsv(egta::RunExperiment("bound-compare-factored", json::object()).text);
  const int changes = std::stoi(csv.meta.at("sign_changes"));
  const int at = csv.meta.count("crossover_players") ? std::stoi(csv.meta.at("crossover_players"))
                                                     : -1;
  return {changes == 1 && at >= 20 && at <= 45,
          Fmt("sign_changes=%d crossover_players=%d", changes, at)};
}

Verdict Symmetrization() {
  const auto base = egta::GenerateRandomGame(2, 2, 10.0, 31);
  const egta::NoisySimulator sim(base, 5.0);
  const auto all = egta::IndexSet::Full(base);
  const std::size_t m = 50;
  const int reps = 2000;
  std::vector<double> gap(reps);
  double dev_sum = 0, era_sum = 0;
  for (int rep = 0; rep < reps; ++rep) {
    const std::uint64_t seed = egta::ReplicationSeed(1, "acceptance/symmetrization", rep);
    std::vector<egta::Condition> xs(m);
    for (std::size_t j = 0; j < m; ++j) xs[j] = {egta::Hash({seed, 0, j})};
    const auto est = egta::EmpiricalGame(sim, all, xs);
    double dev = 0;
    for (std::size_t k = 0; k < all.size(); ++k)
      dev = std::max(dev, std::abs(est.means[k] - base(all[k])));
    // Centering each row on its true mean leaves the deviation unchanged and
    // tightens the Rademacher side.
    egta::SampleTensor centered(all.size(), m);
    for (std::size_t k = 0; k < all.size(); ++k)
      for (std::size_t j = 0; j < m; ++j) centered.at(k, j) = est.samples.at(k, j) - base(all[k]);
    const double era = egta::OneEra(centered, egta::RademacherSigns::Draw(m, seed));
    gap[rep] = dev - 2 * era;
    dev_sum += dev;
    era_sum += era;
  }
  const auto ci = egta::MeanWithCi(gap);
  const double se = (ci.high - ci.mean) / 1.96;
  return {ci.mean <= 3 * se,
          Fmt("E[sup dev]=%.4f 2E[1-ERA]=%.4f SE(diff)=%.4f", dev_sum / reps,
              2 * era_sum / reps, se)};
}

Verdict Rosenthal() {
  int with_eq = 0;
  const int instances = 200;
  for (int i = 0; i < instances; ++i) {
    const std::uint64_t seed = egta::ReplicationSeed(1, "acceptance/rosenthal", i);
    const int players = 2 + i % 4, facilities = 3 + i % 3, k = 1 + i % 3;
    const auto game = egta::Expand(
        egta::GenerateCongestionGame(players, facilities, k, 0.5, seed));
    const bool lib = !egta::PureEpsNash(game, 0.0).empty();
    const bool brute = !oracle::Nash(game, 0.0).empty();
    with_eq += lib && brute ? 1 : 0;
  }
  return {with_eq == instances, Fmt("%d/%d instances have a pure Nash", with_eq, instances)};
}

Verdict BoundRegression() {
  const double worst = std::max(hp::WorstBoundError(2024), hp::WorstBoundError(4242));
  return {worst <= 1e-12, Fmt("max relative error %.3g over 2x100 draws", worst)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"ppa-oracle", PpaOracle},
      {"crossover-size", Crossover},
      {"containment", Containment},
      {"gs-guarantee", GsGuarantee},
      {"eps-decay", EpsDecay},
      {"nash-frequency", NashFrequency},
      {"gs-vs-psp", GsVsPsp},
      {"factored-crossover", FactoredCrossover},
      {"symmetrization", Symmetrization},
      {"rosenthal", Rosenthal},
      {"bound-regression", BoundRegression},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-18s %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
