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

#ifndef EGTA_EXPERIMENTS_HPP_
#define EGTA_EXPERIMENTS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "egta/bounds.hpp"

// Desk-scale reproductions of the evaluation experiments. Each experiment
// takes a JSON object of parameters (missing keys take documented defaults,
// unknown keys are rejected) and returns CSV text: zero or more "# key=value"
// metadata lines, one header row, then data rows, all '\n'-terminated.
// Output is a pure function of the parameters, including "seed"; "threads"
// only changes wall time.

namespace egta {

struct ExperimentOutput {
  std::string text;
  std::string format;  // "csv" or "text"
};

std::vector<std::string> ExperimentNames();
// Parameter defaults and the CSV schema, for --help.
std::string ExperimentHelp(std::string_view name);
// Throws std::invalid_argument for unknown names or bad parameters.
ExperimentOutput RunExperiment(std::string_view name, const nlohmann::json& params);

// Stable per-replication seed: Hash(master, experiment, replication).
std::uint64_t ReplicationSeed(std::uint64_t master, std::string_view experiment,
                              std::uint64_t replication);

// Mean and normal-approximation 95% interval (mean +- 1.96 stderr).
struct MeanCi {
  double mean = 0.0;
  double low = 0.0;
  double high = 0.0;
};
MeanCi MeanWithCi(const std::vector<double>& values);
MeanCi ProportionWithCi(std::size_t successes, std::size_t trials);

// Variable-scale noise profile over N = e^log_num_indices indices with
// n = ceil(log2 N) dyadic intervals: v_i = c 2^(i-n), F(v_{i-1}, v_i) = ceil(N / 2^i).
NoiseProfile DyadicNoiseProfile(double a, double c, double log_num_indices);

// Ordinary least squares slope of y on x.
double OlsSlope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace egta

#endif  // EGTA_EXPERIMENTS_HPP_
