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

#include "sg/json_io.hpp"

#include <fstream>
#include <unordered_set>

namespace sg {
namespace {

using nlohmann::json;

RepKind kind_from_string(const std::string& tag) {
  if (tag == "W") return RepKind::W;
  if (tag == "L") return RepKind::L;
  if (tag == "Wm") return RepKind::Wm;
  if (tag == "LM") return RepKind::LM;
  throw parse_error("game: unknown kind \"" + tag + "\"");
}

}  // namespace

json coalition_to_json(Coalition c) {
  json out = json::array();
  for (Player p : c.members()) out.push_back(p);
  return out;
}

Coalition coalition_from_json(const json& doc, int n) {
  if (!doc.is_array()) {
    throw parse_error("coalition: expected an array of player ids");
  }
  Coalition c;
  int previous = -1;
  for (const json& entry : doc) {
    if (!entry.is_number_integer()) {
      throw parse_error("coalition: player ids must be integers");
    }
    const int p = entry.get<int>();
    if (p < 0 || p >= n) {
      throw parse_error("coalition: player " + std::to_string(p) +
                        " out of range for n=" + std::to_string(n));
    }
    if (p <= previous) {
      throw parse_error(
          "coalition: player ids must be strictly ascending");
    }
    previous = p;
    c = c.with(p);
  }
  return c;
}

json game_to_json(const GameRep& rep) {
  json out;
  out["n"] = rep.n;
  out["kind"] = to_string(rep.kind);
  json list = json::array();
  for (Coalition c : rep.coalitions) list.push_back(coalition_to_json(c));
  out["coalitions"] = std::move(list);
  return out;
}

GameRep game_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw parse_error("game: expected a JSON object");
  }
  for (const char* key : {"n", "kind", "coalitions"}) {
    if (!doc.contains(key)) {
      throw parse_error(std::string("game: missing key \"") + key + "\"");
    }
  }
  if (!doc["n"].is_number_integer()) {
    throw parse_error("game: \"n\" must be an integer");
  }
  GameRep rep;
  rep.n = doc["n"].get<int>();
  if (rep.n < 1 || rep.n > kMaxPlayers) {
    throw parse_error("game: n must be in [1, " +
                      std::to_string(kMaxPlayers) + "]");
  }
  if (!doc["kind"].is_string()) {
    throw parse_error("game: \"kind\" must be a string");
  }
  rep.kind = kind_from_string(doc["kind"].get<std::string>());
  if (!doc["coalitions"].is_array()) {
    throw parse_error("game: \"coalitions\" must be an array");
  }
  std::unordered_set<std::uint64_t> seen;
  for (const json& entry : doc["coalitions"]) {
    const Coalition c = coalition_from_json(entry, rep.n);
    if (!seen.insert(c.mask()).second) {
      throw parse_error("game: duplicate coalition " + to_string(c));
    }
    rep.coalitions.push_back(c);
  }
  return rep;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw parse_error("cannot open file: " + path);
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

GameRep read_game_file(const std::string& path) {
  const json doc = read_json_file(path);
  if (doc.is_object() && doc.contains("game")) {
    return game_from_json(doc["game"]);
  }
  return game_from_json(doc);
}

json application_to_json(const TradeApplication& application) {
  json out;
  out["j"] = application.j;
  json list = json::array();
  for (Coalition c : application.coalitions) {
    list.push_back(coalition_to_json(c));
  }
  out["coalitions"] = std::move(list);
  out["winners"] = application.winners;
  return out;
}

json sat_instance_to_json(const SatGameInstance& instance) {
  json out;
  out["game"] = game_to_json(instance.game);
  json given = json::array();
  for (Coalition c : instance.given) given.push_back(coalition_to_json(c));
  out["given"] = std::move(given);
  json names;
  for (std::size_t p = 0; p < instance.player_names.size(); ++p) {
    names[std::to_string(p)] = instance.player_names[p];
  }
  out["names"] = std::move(names);
  return out;
}

json split_instance_to_json(const SetSplittingInstance& instance) {
  json out;
  out["universe"] = coalition_to_json(instance.universe);
  json family = json::array();
  for (Coalition z : instance.family) family.push_back(coalition_to_json(z));
  out["family"] = std::move(family);
  out["k"] = instance.k;
  return out;
}

SetSplittingInstance split_instance_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw parse_error("set splitting: expected a JSON object");
  }
  for (const char* key : {"universe", "family", "k"}) {
    if (!doc.contains(key)) {
      throw parse_error(std::string("set splitting: missing key \"") + key +
                        "\"");
    }
  }
  SetSplittingInstance inst;
  inst.universe = coalition_from_json(doc["universe"], kMaxPlayers);
  if (!doc["family"].is_array()) {
    throw parse_error("set splitting: \"family\" must be an array");
  }
  for (const json& entry : doc["family"]) {
    inst.family.push_back(coalition_from_json(entry, kMaxPlayers));
  }
  if (!doc["k"].is_number_integer()) {
    throw parse_error("set splitting: \"k\" must be an integer");
  }
  inst.k = doc["k"].get<int>();
  return inst;
}

}  // namespace sg
