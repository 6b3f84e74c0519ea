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

#ifndef EGTA_JSON_IO_HPP_
#define EGTA_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "egta/algorithms.hpp"
#include "egta/game.hpp"
#include "egta/simulators.hpp"

// JSON schemas:
//   game:       {"players": N, "strategies": [k_1..k_N],
//                "utilities": [N * prod k entries, player-major]}
//   congestion: {"players": N, "facilities": M,
//                "strategies": [[[facility, ...], ...] per player],
//                "cost": "linear", "slopes": [optional, per facility]}
// Readers throw std::invalid_argument on schema violations.

namespace egta {

nlohmann::json GameToJson(const NormalFormGame& game);
NormalFormGame GameFromJson(const nlohmann::json& j);

nlohmann::json CongestionToJson(const CongestionGame& game);
CongestionGame CongestionFromJson(const nlohmann::json& j);

nlohmann::json GsResultToJson(const GsResult& result, const NormalFormGame& shape);
nlohmann::json PspResultToJson(const PspResult& result);

class JsonParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws JsonParseError on malformed text.
nlohmann::json ParseJson(const std::string& text);

}  // namespace egta

#endif  // EGTA_JSON_IO_HPP_
