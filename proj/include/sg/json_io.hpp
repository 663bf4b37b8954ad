// Copyright 2026 The sgtrade Authors
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

#ifndef SG_JSON_IO_HPP_
#define SG_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "sg/core.hpp"
#include "sg/reductions.hpp"
#include "sg/set_splitting.hpp"
#include "sg/trade.hpp"

namespace sg {

// Game documents: {"n": int, "kind": "W"|"L"|"Wm"|"LM", "coalitions":
// [[player ids, strictly ascending], ...]}. Coalition arrays that are not
// strictly ascending, duplicate coalitions, out-of-range players, unknown
// kinds, and type mismatches raise parse_error. Serialization writes
// coalitions in stored order, members ascending, so parse/serialize
// round-trips are byte-stable.

nlohmann::json coalition_to_json(Coalition c);
Coalition coalition_from_json(const nlohmann::json& doc, int n);

nlohmann::json game_to_json(const GameRep& rep);
GameRep game_from_json(const nlohmann::json& doc);

/// Reads a game document from a file; a wrapper document that carries the
/// game under a "game" key (as emitted for generated instances) is
/// unwrapped transparently.
GameRep read_game_file(const std::string& path);

/// Reads any JSON document from a file, mapping IO and syntax problems to
/// parse_error.
nlohmann::json read_json_file(const std::string& path);

nlohmann::json application_to_json(const TradeApplication& application);

/// {"game": ..., "given": [...], "names": {"<player id>": "<role>", ...}}.
nlohmann::json sat_instance_to_json(const SatGameInstance& instance);

// Set-splitting documents: {"universe": [...], "family": [[...], ...],
// "k": int}.
nlohmann::json split_instance_to_json(const SetSplittingInstance& instance);
SetSplittingInstance split_instance_from_json(const nlohmann::json& doc);

}  // namespace sg

#endif  // SG_JSON_IO_HPP_
