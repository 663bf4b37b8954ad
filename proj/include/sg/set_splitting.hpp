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

#ifndef SG_SET_SPLITTING_HPP_
#define SG_SET_SPLITTING_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "sg/core.hpp"

namespace sg {

/// Ask whether `universe` can be split into two parts such that at least k
/// of the family's sets meet both parts.
struct SetSplittingInstance {
  Coalition universe;
  std::vector<Coalition> family;
  int k = 0;
};

// Largest universe solve_set_splitting will enumerate by default.
inline constexpr int kDefaultSplitCap = 24;

/// Builds the set-splitting question equivalent to completing the losing
/// pair (s1, s2) into a 2-trade on the game (n, LM, lm): universe s1|s2,
/// one family set (s1|s2) - l per maximal losing l that contains s1&s2,
/// and k = the whole family. Throws precondition_error unless both s1 and
/// s2 classify as Losing under lm_rep.
SetSplittingInstance build_set_splitting(const GameRep& lm_rep, Coalition s1,
                                         Coalition s2);

/// Exhaustive bipartition search. Returns the first splitting partition
/// (U1, U2) in mask-ascending order over U1, with the smallest universe
/// member pinned to U2; nullopt when no bipartition splits k sets.
/// Throws budget_error when the universe exceeds cap.
std::optional<std::pair<Coalition, Coalition>> solve_set_splitting(
    const SetSplittingInstance& inst, int cap = kDefaultSplitCap);

}  // namespace sg

#endif  // SG_SET_SPLITTING_HPP_
