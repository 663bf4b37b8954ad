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

#include "sg/set_splitting.hpp"

#include <string>

namespace sg {

SetSplittingInstance build_set_splitting(const GameRep& lm_rep, Coalition s1,
                                         Coalition s2) {
  if (lm_rep.kind != RepKind::LM) {
    throw precondition_error(
        "build_set_splitting: game must list maximal losing coalitions");
  }
  if (classify(lm_rep, s1) != Classification::Losing ||
      classify(lm_rep, s2) != Classification::Losing) {
    throw precondition_error(
        "build_set_splitting: both coalitions must be losing");
  }
  const Coalition universe = s1 | s2;
  const Coalition common = s1 & s2;
  SetSplittingInstance inst;
  inst.universe = universe;
  // Only losing coalitions covering the common part constrain how the rest
  // may be divided; each contributes the universe members it misses.
  for (Coalition l : lm_rep.coalitions) {
    if (common.subset_of(l)) inst.family.push_back(universe - l);
  }
  inst.k = static_cast<int>(inst.family.size());
  return inst;
}

std::optional<std::pair<Coalition, Coalition>> solve_set_splitting(
    const SetSplittingInstance& inst, int cap) {
  const std::vector<Player> members = inst.universe.members();
  const int m = static_cast<int>(members.size());
  if (m > cap) {
    throw budget_error("solve_set_splitting: universe of size " +
                       std::to_string(m) + " exceeds the cap of " +
                       std::to_string(cap));
  }
  // Swapping the parts preserves splitting, so the smallest member stays in
  // U2 and only the remaining m-1 members are assigned freely.
  const int free_members = m > 0 ? m - 1 : 0;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << free_members);
       ++choice) {
    Coalition u1;
    for (int i = 0; i < free_members; ++i) {
      if ((choice >> i) & 1) u1 = u1.with(members[i + 1]);
    }
    const Coalition u2 = inst.universe - u1;
    int split = 0;
    for (Coalition z : inst.family) {
      if (!(z & u1).empty() && !(z & u2).empty()) ++split;
    }
    if (split >= inst.k) return std::make_pair(u1, u2);
  }
  return std::nullopt;
}

}  // namespace sg
