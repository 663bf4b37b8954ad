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

#include "sg/convert.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace sg {
namespace {

std::vector<Coalition> sorted_unique(std::vector<Coalition> list) {
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return list;
}

void require_valid(const GameRep& rep, const char* op) {
  const ValidationReport report = validate_game(rep);
  if (!report.valid) {
    std::string msg = std::string(op) + ": invalid game";
    for (const std::string& v : report.violations) msg += "; " + v;
    throw precondition_error(msg);
  }
}

std::unordered_set<std::uint64_t> mask_set(const std::vector<Coalition>& list) {
  std::unordered_set<std::uint64_t> set;
  set.reserve(list.size() * 2);
  for (Coalition c : list) set.insert(c.mask());
  return set;
}

}  // namespace

std::vector<Coalition> minimal_elements(std::vector<Coalition> list) {
  list = sorted_unique(std::move(list));
  std::vector<Coalition> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool minimal = true;
    // A proper subset has a strictly smaller mask, so earlier entries suffice.
    for (std::size_t k = 0; k < i && minimal; ++k) {
      minimal = !list[k].subset_of(list[i]);
    }
    if (minimal) out.push_back(list[i]);
  }
  return out;
}

std::vector<Coalition> maximal_elements(std::vector<Coalition> list) {
  list = sorted_unique(std::move(list));
  std::vector<Coalition> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    bool maximal = true;
    for (std::size_t k = i + 1; k < list.size() && maximal; ++k) {
      maximal = !list[i].subset_of(list[k]);
    }
    if (maximal) out.push_back(list[i]);
  }
  return out;
}

std::vector<Coalition> wm_from_l(int n, const std::vector<Coalition>& losing) {
  require_valid(GameRep{n, RepKind::L, losing}, "wm_from_l");
  const auto lset = mask_set(losing);
  std::vector<Coalition> out;
  for (Coalition base : losing) {
    for (Player p = 0; p < n; ++p) {
      if (base.contains(p)) continue;
      const Coalition cand = base.with(p);
      if (lset.count(cand.mask())) continue;
      bool all_removals_lose = true;
      for (Player q : cand.members()) {
        if (!lset.count(cand.without(q).mask())) {
          all_removals_lose = false;
          break;
        }
      }
      if (all_removals_lose) out.push_back(cand);
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<Coalition> lm_from_w(int n, const std::vector<Coalition>& winning) {
  require_valid(GameRep{n, RepKind::W, winning}, "lm_from_w");
  const auto wset = mask_set(winning);
  std::vector<Coalition> out;
  for (Coalition base : winning) {
    for (Player p : base.members()) {
      const Coalition cand = base.without(p);
      if (wset.count(cand.mask())) continue;
      bool all_additions_win = true;
      for (Player q = 0; q < n; ++q) {
        if (cand.contains(q)) continue;
        if (!wset.count(cand.with(q).mask())) {
          all_additions_win = false;
          break;
        }
      }
      if (all_additions_win) out.push_back(cand);
    }
  }
  return sorted_unique(std::move(out));
}

GameRep expand(const GameRep& rep, int oracle_cap) {
  if (rep.n < 1 || rep.n > kMaxPlayers) {
    throw precondition_error("expand: player count out of range");
  }
  if (rep.n > oracle_cap) {
    throw budget_error("expand: n=" + std::to_string(rep.n) +
                       " exceeds the exhaustive enumeration cap of " +
                       std::to_string(oracle_cap));
  }
  const RepKind target =
      (rep.kind == RepKind::Wm || rep.kind == RepKind::L) ? RepKind::W
                                                          : RepKind::L;
  const Classification keep = target == RepKind::W ? Classification::Winning
                                                   : Classification::Losing;
  GameRep out{rep.n, target, {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rep.n); ++mask) {
    const Coalition s = Coalition::from_mask(mask);
    if (classify(rep, s) == keep) out.coalitions.push_back(s);
  }
  return out;
}

GameRep convert_game(const GameRep& rep, RepKind to, int oracle_cap) {
  require_valid(rep, "convert_game");
  if (rep.kind == to) {
    return GameRep{rep.n, to, sorted_unique(rep.coalitions)};
  }
  switch (to) {
    case RepKind::W:
      switch (rep.kind) {
        case RepKind::L:
        case RepKind::Wm:
          return expand(rep, oracle_cap);
        case RepKind::LM:
          return expand(expand(rep, oracle_cap), oracle_cap);
        default:
          break;
      }
      break;
    case RepKind::L:
      switch (rep.kind) {
        case RepKind::W:
        case RepKind::LM:
          return expand(rep, oracle_cap);
        case RepKind::Wm:
          return expand(expand(rep, oracle_cap), oracle_cap);
        default:
          break;
      }
      break;
    case RepKind::Wm:
      switch (rep.kind) {
        case RepKind::W:
          return GameRep{rep.n, RepKind::Wm, minimal_elements(rep.coalitions)};
        case RepKind::L:
          return GameRep{rep.n, RepKind::Wm, wm_from_l(rep.n, rep.coalitions)};
        case RepKind::LM: {
          const GameRep losing = expand(rep, oracle_cap);
          return GameRep{rep.n, RepKind::Wm,
                         wm_from_l(rep.n, losing.coalitions)};
        }
        default:
          break;
      }
      break;
    case RepKind::LM:
      switch (rep.kind) {
        case RepKind::L:
          return GameRep{rep.n, RepKind::LM, maximal_elements(rep.coalitions)};
        case RepKind::W:
          return GameRep{rep.n, RepKind::LM, lm_from_w(rep.n, rep.coalitions)};
        case RepKind::Wm: {
          const GameRep winning = expand(rep, oracle_cap);
          return GameRep{rep.n, RepKind::LM,
                         lm_from_w(rep.n, winning.coalitions)};
        }
        default:
          break;
      }
      break;
  }
  throw error("convert_game: unsupported conversion");
}

}  // namespace sg
