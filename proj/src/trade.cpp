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

#include "sg/trade.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>
#include <unordered_set>
#include <utility>

#include "sg/convert.hpp"
#include "sg/set_splitting.hpp"

namespace sg {
namespace {

void require_valid_rep(const GameRep& rep, const char* op) {
  const ValidationReport report = validate_game(rep);
  if (!report.valid) {
    std::string msg = std::string(op) + ": invalid game";
    for (const std::string& v : report.violations) msg += "; " + v;
    throw precondition_error(msg);
  }
}

void require_class(const GameRep& rep, Coalition s, Classification want,
                   const char* op) {
  if (classify(rep, s) != want) {
    throw precondition_error(
        std::string(op) + ": given coalition " + to_string(s) + " is not " +
        (want == Classification::Winning ? "winning" : "losing"));
  }
}

std::vector<Coalition> sorted_copy(std::vector<Coalition> list) {
  std::sort(list.begin(), list.end());
  return list;
}

struct Meter {
  std::uint64_t limit = 0;
  std::uint64_t used = 0;
  void spend(const char* op) {
    if (++used > limit) {
      throw budget_error(std::string(op) + ": enumeration budget of " +
                         std::to_string(limit) + " exceeded");
    }
  }
};

struct Counts {
  std::array<std::uint8_t, kMaxPlayers> at{};
  void add(Coalition c) {
    for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
      ++at[std::countr_zero(m)];
    }
  }
  void remove(Coalition c) {
    for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
      --at[std::countr_zero(m)];
    }
  }
};

Counts counts_of(std::span<const Coalition> list) {
  Counts counts;
  for (Coalition c : list) counts.add(c);
  return counts;
}

// Raises per-player membership to match target exactly; each missing unit of
// a player goes to the earliest set lacking that player. Supersets of the
// originals, so winning sets stay winning.
std::vector<Coalition> pad_to_target(std::vector<Coalition> sets,
                                     Counts have, const Counts& target,
                                     int n) {
  for (Player p = 0; p < n; ++p) {
    int deficit = target.at[p] - have.at[p];
    for (std::size_t i = 0; i < sets.size() && deficit > 0; ++i) {
      if (!sets[i].contains(p)) {
        sets[i] = sets[i].with(p);
        --deficit;
      }
    }
  }
  return sets;
}

// Lowers per-player membership to match target exactly; each excess unit of
// a player is removed from the earliest set containing it. Subsets of the
// originals, so losing sets stay losing.
std::vector<Coalition> strip_to_target(std::vector<Coalition> sets,
                                       Counts have, const Counts& target,
                                       int n) {
  for (Player p = 0; p < n; ++p) {
    int surplus = have.at[p] - target.at[p];
    for (std::size_t i = 0; i < sets.size() && surplus > 0; ++i) {
      if (sets[i].contains(p)) {
        sets[i] = sets[i].without(p);
        --surplus;
      }
    }
  }
  return sets;
}

TradeApplication assemble(const std::vector<Coalition>& first,
                          const std::vector<Coalition>& second,
                          bool winners_in_second) {
  TradeApplication app;
  app.j = static_cast<int>(first.size());
  app.coalitions = first;
  app.coalitions.insert(app.coalitions.end(), second.begin(), second.end());
  for (int i = 0; i < app.j; ++i) {
    app.winners.push_back(winners_in_second ? app.j + i : i);
  }
  return app;
}

TradeAnswer yes_answer(std::span<const Coalition> given,
                       std::vector<Coalition> witness, bool witness_wins) {
  TradeAnswer ans;
  ans.decision = true;
  ans.application =
      assemble({given.begin(), given.end()}, witness, witness_wins);
  ans.witness = std::move(witness);
  return ans;
}

// First listed pair (a, b), a <= b by mask, whose union and intersection
// equal those of (s1, s2). The partner of a is determined, so a single
// ascending scan finds the lexicographically first pair.
std::optional<std::pair<Coalition, Coalition>> exact_pair_in_list(
    const std::vector<Coalition>& list, Coalition s1, Coalition s2) {
  const std::vector<Coalition> sorted = sorted_copy(list);
  std::unordered_set<std::uint64_t> members;
  members.reserve(sorted.size() * 2);
  for (Coalition c : sorted) members.insert(c.mask());
  const Coalition unio = s1 | s2;
  const Coalition inter = s1 & s2;
  for (Coalition a : sorted) {
    if (!inter.subset_of(a) || !a.subset_of(unio)) continue;
    const Coalition b = inter | (unio - a);
    if (b.mask() < a.mask()) continue;
    if (members.count(b.mask())) return std::make_pair(a, b);
  }
  return std::nullopt;
}

// Pair (m_i, m_k), i <= k, of minimal winning coalitions whose joint
// multiplicities fit under those of the losing pair; padding then restores
// exact balance.
TradeAnswer complete_with_winning_pair(std::vector<Coalition> wm,
                                       Coalition s1, Coalition s2, int n) {
  wm = sorted_copy(std::move(wm));
  const Coalition unio = s1 | s2;
  const Coalition inter = s1 & s2;
  const std::array<Coalition, 2> given = {s1, s2};
  for (std::size_t i = 0; i < wm.size(); ++i) {
    for (std::size_t k = i; k < wm.size(); ++k) {
      if (!(wm[i] | wm[k]).subset_of(unio)) continue;
      if (!(wm[i] & wm[k]).subset_of(inter)) continue;
      const std::vector<Coalition> pair = {wm[i], wm[k]};
      return yes_answer(given,
                        pad_to_target(pair, counts_of(pair),
                                      counts_of(given), n),
                        /*witness_wins=*/true);
    }
  }
  return {};
}

// Pair (l_i, l_k), i <= k, of maximal losing coalitions whose joint
// multiplicities cover those of the winning pair; stripping then restores
// exact balance.
TradeAnswer complete_with_losing_pair(std::vector<Coalition> lm, Coalition s1,
                                      Coalition s2, int n) {
  lm = sorted_copy(std::move(lm));
  const Coalition unio = s1 | s2;
  const Coalition inter = s1 & s2;
  const std::array<Coalition, 2> given = {s1, s2};
  for (std::size_t i = 0; i < lm.size(); ++i) {
    for (std::size_t k = i; k < lm.size(); ++k) {
      if (!unio.subset_of(lm[i] | lm[k])) continue;
      if (!inter.subset_of(lm[i] & lm[k])) continue;
      const std::vector<Coalition> pair = {lm[i], lm[k]};
      return yes_answer(given,
                        strip_to_target(pair, counts_of(pair),
                                        counts_of(given), n),
                        /*witness_wins=*/false);
    }
  }
  return {};
}

// DFS over j-multisets of candidates (non-decreasing index) whose joint
// counts stay pointwise <= target. Deterministic lexicographic order.
std::optional<std::vector<Coalition>> scan_within_target(
    const std::vector<Coalition>& cands, int j, const Counts& target, int n,
    Meter& meter, const char* op) {
  std::vector<Coalition> picked;
  picked.reserve(j);
  Counts have;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(picked.size()) == j) return true;
    Coalition headroom;
    for (Player p = 0; p < n; ++p) {
      if (have.at[p] < target.at[p]) headroom = headroom.with(p);
    }
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      meter.spend(op);
      if (!cands[idx].subset_of(headroom)) continue;
      have.add(cands[idx]);
      picked.push_back(cands[idx]);
      if (rec(idx)) return true;
      picked.pop_back();
      have.remove(cands[idx]);
    }
    return false;
  };
  if (rec(0)) return picked;
  return std::nullopt;
}

// DFS over j-multisets of candidates whose joint counts end up pointwise
// >= target. Prunes when some player's remaining deficit exceeds the number
// of picks left or is unreachable from the remaining candidates.
std::optional<std::vector<Coalition>> scan_covering_target(
    const std::vector<Coalition>& cands, int j, const Counts& target, int n,
    Meter& meter, const char* op) {
  std::vector<std::uint64_t> suffix_union(cands.size() + 1, 0);
  for (std::size_t i = cands.size(); i-- > 0;) {
    suffix_union[i] = suffix_union[i + 1] | cands[i].mask();
  }
  std::vector<Coalition> picked;
  picked.reserve(j);
  Counts have;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    const int remaining = j - static_cast<int>(picked.size());
    int max_deficit = 0;
    std::uint64_t need = 0;
    for (Player p = 0; p < n; ++p) {
      const int deficit = target.at[p] - have.at[p];
      if (deficit > 0) {
        max_deficit = std::max(max_deficit, deficit);
        need |= std::uint64_t{1} << p;
      }
    }
    if (max_deficit > remaining) return false;
    if (remaining == 0) return true;
    if ((need & ~suffix_union[start]) != 0) return false;
    for (std::size_t idx = start; idx < cands.size(); ++idx) {
      meter.spend(op);
      have.add(cands[idx]);
      picked.push_back(cands[idx]);
      if (rec(idx)) return true;
      picked.pop_back();
      have.remove(cands[idx]);
    }
    return false;
  };
  if (rec(0)) return picked;
  return std::nullopt;
}

}  // namespace

bool verify(const GameRep& rep, const TradeApplication& ta) {
  if (ta.j < 1) return false;
  if (ta.coalitions.size() != static_cast<std::size_t>(2 * ta.j)) return false;
  if (ta.winners.size() != static_cast<std::size_t>(ta.j)) return false;
  std::vector<bool> is_winner(ta.coalitions.size(), false);
  for (int idx : ta.winners) {
    if (idx < 0 || idx >= 2 * ta.j || is_winner[idx]) return false;
    is_winner[idx] = true;
  }
  PlayerCounts winning_side;
  PlayerCounts losing_side;
  for (std::size_t i = 0; i < ta.coalitions.size(); ++i) {
    const bool wins = classify(rep, ta.coalitions[i]) ==
                      Classification::Winning;
    if (wins != static_cast<bool>(is_winner[i])) return false;
    (wins ? winning_side : losing_side).add(ta.coalitions[i]);
  }
  return winning_side == losing_side;
}

TradeAnswer decide_beta_L(const GameRep& rep, Coalition s1, Coalition s2) {
  require_valid_rep(rep, "decide_beta_L");
  require_class(rep, s1, Classification::Losing, "decide_beta_L");
  require_class(rep, s2, Classification::Losing, "decide_beta_L");
  switch (rep.kind) {
    case RepKind::W: {
      const auto pair = exact_pair_in_list(rep.coalitions, s1, s2);
      if (!pair) return {};
      const std::array<Coalition, 2> given = {s1, s2};
      return yes_answer(given, {pair->first, pair->second},
                        /*witness_wins=*/true);
    }
    case RepKind::Wm:
      return complete_with_winning_pair(rep.coalitions, s1, s2, rep.n);
    case RepKind::L:
      return complete_with_winning_pair(wm_from_l(rep.n, rep.coalitions), s1,
                                        s2, rep.n);
    case RepKind::LM:
      break;
  }
  throw precondition_error(
      "decide_beta_L: representation must be W, Wm, or L");
}

TradeAnswer decide_beta_W(const GameRep& rep, Coalition s1, Coalition s2) {
  require_valid_rep(rep, "decide_beta_W");
  require_class(rep, s1, Classification::Winning, "decide_beta_W");
  require_class(rep, s2, Classification::Winning, "decide_beta_W");
  switch (rep.kind) {
    case RepKind::L: {
      const auto pair = exact_pair_in_list(rep.coalitions, s1, s2);
      if (!pair) return {};
      const std::array<Coalition, 2> given = {s1, s2};
      return yes_answer(given, {pair->first, pair->second},
                        /*witness_wins=*/false);
    }
    case RepKind::LM:
      return complete_with_losing_pair(rep.coalitions, s1, s2, rep.n);
    case RepKind::W:
      return complete_with_losing_pair(lm_from_w(rep.n, rep.coalitions), s1,
                                       s2, rep.n);
    case RepKind::Wm:
      break;
  }
  throw precondition_error(
      "decide_beta_W: representation must be L, LM, or W");
}

TradeAnswer decide_Wm_W_exact(const GameRep& rep, Coalition s1, Coalition s2,
                              std::uint64_t budget) {
  if (rep.kind != RepKind::Wm) {
    throw precondition_error(
        "decide_Wm_W_exact: representation must list minimal winning "
        "coalitions");
  }
  require_valid_rep(rep, "decide_Wm_W_exact");
  require_class(rep, s1, Classification::Winning, "decide_Wm_W_exact");
  require_class(rep, s2, Classification::Winning, "decide_Wm_W_exact");
  // A completing losing pair must reproduce the given pair's union and
  // intersection exactly, so only splits of the symmetric difference exist.
  const Coalition inter = s1 & s2;
  const Coalition diff = (s1 | s2) - inter;
  const std::vector<Player> members = diff.members();
  if (members.size() >= 63) {
    throw budget_error("decide_Wm_W_exact: symmetric difference too large");
  }
  Meter meter{budget};
  const std::array<Coalition, 2> given = {s1, s2};
  for (std::uint64_t pick = 0;
       pick < (std::uint64_t{1} << members.size()); ++pick) {
    meter.spend("decide_Wm_W_exact");
    Coalition a;
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((pick >> i) & 1) a = a.with(members[i]);
    }
    const Coalition s3 = inter | a;
    const Coalition s4 = inter | (diff - a);
    if (classify(rep, s3) == Classification::Losing &&
        classify(rep, s4) == Classification::Losing) {
      return yes_answer(given, {s3, s4}, /*witness_wins=*/false);
    }
  }
  return {};
}

TradeAnswer decide_LM_L_exact(const GameRep& rep, Coalition s1, Coalition s2,
                              std::uint64_t budget) {
  if (rep.kind != RepKind::LM) {
    throw precondition_error(
        "decide_LM_L_exact: representation must list maximal losing "
        "coalitions");
  }
  require_valid_rep(rep, "decide_LM_L_exact");
  require_class(rep, s1, Classification::Losing, "decide_LM_L_exact");
  require_class(rep, s2, Classification::Losing, "decide_LM_L_exact");
  const SetSplittingInstance inst = build_set_splitting(rep, s1, s2);
  // 2^(m-1) bipartitions are enumerated, so the cap follows the budget.
  const int cap = static_cast<int>(std::bit_width(std::max<std::uint64_t>(
                      budget, 1))) ;
  const auto part = solve_set_splitting(inst, std::min(cap, 62));
  if (!part) return {};
  const Coalition inter = s1 & s2;
  const Coalition s3 = part->first | inter;
  const Coalition s4 = part->second | inter;
  if (classify(rep, s3) != Classification::Winning ||
      classify(rep, s4) != Classification::Winning) {
    throw error("decide_LM_L_exact: reconstruction produced a losing set");
  }
  const std::array<Coalition, 2> given = {s1, s2};
  return yes_answer(given, {s3, s4}, /*witness_wins=*/true);
}

TradeAnswer decide_j_trade(const GameRep& rep, int j,
                           std::span<const Coalition> given,
                           Classification given_type, std::uint64_t budget) {
  if (j < 1) {
    throw precondition_error("decide_j_trade: j must be at least 1");
  }
  if (!given.empty() && static_cast<int>(given.size()) != j) {
    throw precondition_error(
        "decide_j_trade: expected exactly j given coalitions");
  }
  if (rep.kind != RepKind::W && rep.kind != RepKind::L) {
    throw precondition_error(
        "decide_j_trade: representation must be a complete W or L list");
  }
  // Both antichains: any application can be rebuilt from minimal winning
  // sets covered by maximal losing sets, so these candidates are complete.
  std::vector<Coalition> wm;
  std::vector<Coalition> lm;
  if (rep.kind == RepKind::W) {
    lm = lm_from_w(rep.n, rep.coalitions);
    wm = minimal_elements(rep.coalitions);
  } else {
    wm = wm_from_l(rep.n, rep.coalitions);
    lm = maximal_elements(rep.coalitions);
  }
  Meter meter{budget};

  if (!given.empty()) {
    for (Coalition g : given) {
      require_class(rep, g, given_type, "decide_j_trade");
    }
    const Counts target = counts_of(given);
    if (given_type == Classification::Losing) {
      auto found = scan_within_target(wm, j, target, rep.n, meter,
                                      "decide_j_trade");
      if (!found) return {};
      return yes_answer(given,
                        pad_to_target(*found, counts_of(*found), target,
                                      rep.n),
                        /*witness_wins=*/true);
    }
    auto found = scan_covering_target(lm, j, target, rep.n, meter,
                                      "decide_j_trade");
    if (!found) return {};
    return yes_answer(given,
                      strip_to_target(*found, counts_of(*found), target,
                                      rep.n),
                      /*witness_wins=*/false);
  }

  // No given coalitions: search pairs of multisets, losing side outermost,
  // winning side constrained to fit inside the losing side's counts.
  std::vector<Coalition> losing_picked;
  losing_picked.reserve(j);
  Counts losing_counts;
  TradeAnswer answer;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (static_cast<int>(losing_picked.size()) == j) {
      auto found = scan_within_target(wm, j, losing_counts, rep.n, meter,
                                      "decide_j_trade");
      if (!found) return false;
      const std::vector<Coalition> losing = strip_to_target(
          losing_picked, losing_counts, counts_of(*found), rep.n);
      answer.decision = true;
      answer.application = assemble(*found, losing, /*winners_in_second=*/false);
      answer.witness = std::move(*found);
      return true;
    }
    for (std::size_t idx = start; idx < lm.size(); ++idx) {
      meter.spend("decide_j_trade");
      losing_counts.add(lm[idx]);
      losing_picked.push_back(lm[idx]);
      if (rec(idx)) return true;
      losing_picked.pop_back();
      losing_counts.remove(lm[idx]);
    }
    return false;
  };
  rec(0);
  return answer;
}

TradeAnswer dispatch(const TradeQuery& query, std::uint64_t budget,
                     int oracle_cap) {
  const int given_count = static_cast<int>(query.given.size());
  if (given_count == 0 && query.j < 1) {
    throw precondition_error(
        "dispatch: queries without given coalitions must set j >= 1");
  }
  if (given_count > 0 && query.j != 0 && query.j != given_count) {
    throw precondition_error(
        "dispatch: j disagrees with the number of given coalitions");
  }
  const int j = given_count > 0 ? given_count : query.j;

  if (given_count == 2) {
    if (query.given_type == Classification::Losing) {
      switch (query.rep.kind) {
        case RepKind::W:
        case RepKind::Wm:
        case RepKind::L:
          return decide_beta_L(query.rep, query.given[0], query.given[1]);
        case RepKind::LM:
          return decide_LM_L_exact(query.rep, query.given[0], query.given[1],
                                   budget);
      }
    } else {
      switch (query.rep.kind) {
        case RepKind::L:
        case RepKind::LM:
        case RepKind::W:
          return decide_beta_W(query.rep, query.given[0], query.given[1]);
        case RepKind::Wm:
          return decide_Wm_W_exact(query.rep, query.given[0], query.given[1],
                                   budget);
      }
    }
    throw error("dispatch: unknown representation kind");
  }

  GameRep rep = query.rep;
  if (rep.kind == RepKind::Wm || rep.kind == RepKind::LM) {
    rep = expand(rep, oracle_cap);
  }
  return decide_j_trade(rep, j, query.given, query.given_type, budget);
}

}  // namespace sg
