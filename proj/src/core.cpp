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

#include "sg/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace sg {
namespace {

void check_player_range(const GameRep& rep, Coalition s) {
  if (!s.subset_of(rep.grand_coalition())) {
    throw invalid_coalition_error("coalition " + to_string(s) +
                                  " has players outside [0, " +
                                  std::to_string(rep.n) + ")");
  }
}

bool listed(const std::vector<Coalition>& list, Coalition s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

}  // namespace

std::vector<Player> Coalition::members() const {
  std::vector<Player> out;
  out.reserve(size());
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(std::countr_zero(m));
  }
  return out;
}

std::string to_string(Coalition c) {
  std::string out = "{";
  bool first = true;
  for (Player p : c.members()) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  out += "}";
  return out;
}

std::string to_string(RepKind kind) {
  switch (kind) {
    case RepKind::W:
      return "W";
    case RepKind::L:
      return "L";
    case RepKind::Wm:
      return "Wm";
    case RepKind::LM:
      return "LM";
  }
  return "?";
}

Classification classify(const GameRep& rep, Coalition s) {
  check_player_range(rep, s);
  switch (rep.kind) {
    case RepKind::W:
      return listed(rep.coalitions, s) ? Classification::Winning
                                       : Classification::Losing;
    case RepKind::L:
      return listed(rep.coalitions, s) ? Classification::Losing
                                       : Classification::Winning;
    case RepKind::Wm:
      for (Coalition m : rep.coalitions) {
        if (m.subset_of(s)) return Classification::Winning;
      }
      return Classification::Losing;
    case RepKind::LM:
      for (Coalition l : rep.coalitions) {
        if (s.subset_of(l)) return Classification::Losing;
      }
      return Classification::Winning;
  }
  throw error("unknown representation kind");
}

ValidationReport validate_game(const GameRep& rep, int oracle_cap) {
  ValidationReport report;
  auto flag = [&report](std::string msg) {
    report.valid = false;
    report.violations.push_back(std::move(msg));
  };

  if (rep.n < 1) {
    flag("player count must be at least 1");
    return report;
  }
  if (rep.n > kMaxPlayers) {
    flag("player count exceeds supported maximum of " +
         std::to_string(kMaxPlayers));
    return report;
  }

  const Coalition everyone = rep.grand_coalition();
  for (Coalition c : rep.coalitions) {
    if (!c.subset_of(everyone)) {
      flag("coalition " + to_string(c) + " has players outside [0, " +
           std::to_string(rep.n) + ")");
      return report;
    }
  }

  std::unordered_set<std::uint64_t> seen;
  for (Coalition c : rep.coalitions) {
    if (!seen.insert(c.mask()).second) {
      flag("duplicate coalition " + to_string(c));
    }
  }

  const bool minimal_side = rep.kind == RepKind::Wm;
  switch (rep.kind) {
    case RepKind::Wm:
    case RepKind::LM: {
      if (rep.coalitions.empty()) {
        flag(minimal_side ? "no winning coalition: the grand coalition loses"
                          : "no losing coalition: the empty coalition wins");
        break;
      }
      for (std::size_t i = 0; i < rep.coalitions.size(); ++i) {
        for (std::size_t k = 0; k < rep.coalitions.size(); ++k) {
          if (i == k) continue;
          if (rep.coalitions[i].subset_of(rep.coalitions[k]) &&
              rep.coalitions[i] != rep.coalitions[k]) {
            flag("non-antichain: " + to_string(rep.coalitions[i]) +
                 " is a proper subset of " + to_string(rep.coalitions[k]));
          }
        }
      }
      if (minimal_side) {
        if (listed(rep.coalitions, Coalition{})) {
          flag("the empty coalition is winning");
        }
      } else {
        if (listed(rep.coalitions, everyone)) {
          flag("the grand coalition is losing");
        }
      }
      break;
    }
    case RepKind::W: {
      if (!listed(rep.coalitions, everyone)) {
        flag("the grand coalition is not winning");
      }
      if (listed(rep.coalitions, Coalition{})) {
        flag("the empty coalition is winning");
      }
      // One-step closure suffices: the full list is up-closed iff adding any
      // single player to a listed coalition stays listed.
      if (rep.n <= oracle_cap) {
        for (Coalition c : rep.coalitions) {
          for (Player p = 0; p < rep.n; ++p) {
            if (c.contains(p)) continue;
            if (seen.find(c.with(p).mask()) == seen.end()) {
              flag("not monotone: " + to_string(c) + " is winning but " +
                   to_string(c.with(p)) + " is not");
            }
          }
        }
      }
      break;
    }
    case RepKind::L: {
      if (!listed(rep.coalitions, Coalition{})) {
        flag("the empty coalition is not losing");
      }
      if (listed(rep.coalitions, everyone)) {
        flag("the grand coalition is losing");
      }
      if (rep.n <= oracle_cap) {
        for (Coalition c : rep.coalitions) {
          for (Player p : c.members()) {
            if (seen.find(c.without(p).mask()) == seen.end()) {
              flag("not monotone: " + to_string(c) + " is losing but " +
                   to_string(c.without(p)) + " is not");
            }
          }
        }
      }
      break;
    }
  }
  return report;
}

int multiplicity(std::span<const Coalition> coalitions, Player p) {
  int count = 0;
  for (Coalition c : coalitions) {
    if (c.contains(p)) ++count;
  }
  return count;
}

}  // namespace sg
