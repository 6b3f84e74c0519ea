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

#include "egta/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace egta {
namespace {

using nlohmann::json;

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

int PositiveInt(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() <= 0)
    throw std::invalid_argument(std::string(what) + " must be a positive integer");
  return j.get<int>();
}

}  // namespace

json GameToJson(const NormalFormGame& game) {
  return json{{"players", game.num_players()},
              {"strategies", std::vector<int>(game.strategy_counts().begin(),
                                              game.strategy_counts().end())},
              {"utilities", std::vector<double>(game.utilities().begin(),
                                                game.utilities().end())}};
}

NormalFormGame GameFromJson(const json& j) {
  const int players = PositiveInt(Field(j, "players"), "players");
  const json& strategies = Field(j, "strategies");
  if (!strategies.is_array() || strategies.size() != static_cast<std::size_t>(players))
    throw std::invalid_argument("'strategies' must list one count per player");
  std::vector<int> counts;
  for (const json& k : strategies) counts.push_back(PositiveInt(k, "strategy count"));
  const json& utilities = Field(j, "utilities");
  if (!utilities.is_array()) throw std::invalid_argument("'utilities' must be an array");
  std::vector<double> u;
  u.reserve(utilities.size());
  for (const json& x : utilities) {
    if (!x.is_number()) throw std::invalid_argument("utilities must be numbers");
    u.push_back(x.get<double>());
  }
  return NormalFormGame(std::move(counts), std::move(u));
}

json CongestionToJson(const CongestionGame& game) {
  json j{{"players", game.num_players},
         {"facilities", game.num_facilities},
         {"strategies", game.strategies},
         {"cost", "linear"}};
  bool unit = true;
  for (double s : game.slopes) unit = unit && s == 1.0;
  if (!unit) j["slopes"] = game.slopes;
  return j;
}

CongestionGame CongestionFromJson(const json& j) {
  CongestionGame game;
  game.num_players = PositiveInt(Field(j, "players"), "players");
  game.num_facilities = PositiveInt(Field(j, "facilities"), "facilities");
  if (j.contains("cost") && j.at("cost") != "linear")
    throw std::invalid_argument("only linear facility costs are supported");
  try {
    game.strategies =
        Field(j, "strategies").get<std::vector<std::vector<std::vector<int>>>>();
    game.slopes = j.contains("slopes") ? j.at("slopes").get<std::vector<double>>()
                                       : std::vector<double>(game.num_facilities, 1.0);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed congestion game: ") + e.what());
  }
  for (auto& list : game.strategies) {
    for (auto& facilities : list) std::sort(facilities.begin(), facilities.end());
  }
  game.Validate();
  return game;
}

json GsResultToJson(const GsResult& result, const NormalFormGame& shape) {
  json indices = json::array();
  for (const Index& i : result.indices) indices.push_back({i.player, i.profile});
  json j{{"bound", std::string(BoundName(result.bound))},
         {"m", result.m},
         {"delta", result.delta},
         {"eps", result.eps},
         {"indices", std::move(indices)},
         {"utilities", result.utilities}};
  if (result.bound == BoundType::kOneEra) j["one_era"] = result.one_era;
  if (result.indices.size() == shape.size())
    j["game"] = GameToJson(Scatter(shape, result.indices, result.utilities));
  return j;
}

json PspResultToJson(const PspResult& result) {
  json trace = json::array();
  for (const auto& it : result.trace) {
    trace.push_back({{"t", it.t},
                     {"m", it.m},
                     {"indices", it.num_indices},
                     {"eps", it.eps},
                     {"delta", it.delta}});
  }
  json j{{"game", GameToJson(result.utilities)},
         {"radii", result.radii},
         {"pure", result.pure},
         {"eps", result.eps},
         {"delta", result.delta},
         {"iterations", result.trace.size()},
         {"query_cost", QueryCost(result.trace)},
         {"trace", std::move(trace)}};
  if (result.pure) {
    json eq = json::array();
    for (std::size_t s : result.equilibria)
      eq.push_back({{"profile", s}, {"strategies", result.utilities.DecodeProfile(s)}});
    j["equilibria"] = std::move(eq);
  } else {
    j["surviving_strategies"] = result.surviving_strategies;
  }
  return j;
}

json ParseJson(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw JsonParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace egta
