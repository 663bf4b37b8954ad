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

#ifndef SG_CONVERT_HPP_
#define SG_CONVERT_HPP_

#include <vector>

#include "sg/core.hpp"

namespace sg {

// All conversion outputs are sorted by ascending membership mask and
// duplicate-free, so identical games yield identical lists.

/// Subset-minimal members of the list.
std::vector<Coalition> minimal_elements(std::vector<Coalition> list);

/// Subset-maximal members of the list.
std::vector<Coalition> maximal_elements(std::vector<Coalition> list);

/// Minimal winning coalitions of the game whose complete losing list is
/// `losing`. Polynomial: every minimal winning coalition is some losing
/// coalition plus one player, so it suffices to screen those candidates.
/// Throws precondition_error if (n, L, losing) is not a valid game.
std::vector<Coalition> wm_from_l(int n, const std::vector<Coalition>& losing);

/// Maximal losing coalitions of the game whose complete winning list is
/// `winning`. Mirror of wm_from_l: candidates are winning coalitions minus
/// one player. Throws precondition_error if (n, W, winning) is not valid.
std::vector<Coalition> lm_from_w(int n, const std::vector<Coalition>& winning);

/// Exhaustive one-step expansion: Wm -> W, LM -> L, W -> L, L -> W.
/// Enumerates all 2^n coalitions, so n must be at most oracle_cap
/// (budget_error otherwise).
GameRep expand(const GameRep& rep, int oracle_cap = kDefaultOracleCap);

/// Re-expresses rep in the target kind, composing the steps above.
/// Conversions that need exhaustive enumeration are gated by oracle_cap;
/// antichain extraction and the one-player-step conversions are not.
GameRep convert_game(const GameRep& rep, RepKind to,
                     int oracle_cap = kDefaultOracleCap);

}  // namespace sg

#endif  // SG_CONVERT_HPP_
