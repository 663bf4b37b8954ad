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

#ifndef SG_TRADE_HPP_
#define SG_TRADE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "sg/core.hpp"

namespace sg {

/// A j-trade application: 2j coalitions (repetition allowed) of which the j
/// at the `winners` indices are winning and the rest losing, such that every
/// player belongs to exactly as many winning as losing coalitions.
struct TradeApplication {
  int j = 0;
  std::vector<Coalition> coalitions;
  std::vector<int> winners;
};

/// Checks a claimed application against the game: sizes and index bounds,
/// winners winning, non-winners losing, and per-player balance between the
/// two sides. Malformed structure yields false rather than an exception.
bool verify(const GameRep& rep, const TradeApplication& ta);

/// Answer of a trade decision. On yes, `application` always holds a full
/// certified application; `witness` holds the complementary-side coalitions
/// when the query supplied given coalitions, and is empty otherwise.
struct TradeAnswer {
  bool decision = false;
  std::vector<Coalition> witness;
  std::optional<TradeApplication> application;
};

/// Given two losing coalitions, decides whether two winning coalitions
/// complete a 2-trade. Polynomial cases only: rep.kind must be W (exact
/// pair scan over the explicit winning list), Wm (minimal pair plus
/// deterministic padding), or L (via wm_from_l, then as for Wm).
/// Witnesses are the first hit in lexicographic scan order over the
/// mask-sorted candidate list.
TradeAnswer decide_beta_L(const GameRep& rep, Coalition s1, Coalition s2);

/// Given two winning coalitions, decides whether two losing coalitions
/// complete a 2-trade. Polynomial cases only: rep.kind must be L (exact
/// pair scan), LM (maximal pair plus deterministic stripping), or W (via
/// lm_from_w, then as for LM).
TradeAnswer decide_beta_W(const GameRep& rep, Coalition s1, Coalition s2);

/// Exact decider for rep.kind == Wm with two given winning coalitions.
/// Any completing losing pair must use exactly the given pair's union and
/// intersection, so the symmetric difference is enumerated exhaustively
/// (2^|difference| candidates, metered against `budget`).
TradeAnswer decide_Wm_W_exact(const GameRep& rep, Coalition s1, Coalition s2,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// Exact decider for rep.kind == LM with two given losing coalitions,
/// solved through the equivalent set-splitting question on the players
/// where the pair differs. `budget` bounds the bipartition enumeration.
TradeAnswer decide_LM_L_exact(const GameRep& rep, Coalition s1, Coalition s2,
                              std::uint64_t budget = kDefaultEnumerationBudget);

/// General j-trade decision on a complete representation (kind W or L).
///
/// Scans multisets (repetition allowed) of minimal winning and maximal
/// losing coalitions: a j-trade application exists iff some j-multiset of
/// minimal winning coalitions is covered pointwise by a j-multiset of
/// maximal losing ones; padding or stripping then restores exact balance.
/// With `given` (j coalitions classifying as `given_type`) only the
/// complementary side is searched. given may be empty; j >= 1.
/// Work is metered in scan steps against `budget` (budget_error beyond).
TradeAnswer decide_j_trade(const GameRep& rep, int j,
                           std::span<const Coalition> given,
                           Classification given_type,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// A trade decision problem: the game, the claimed classification of the
/// given coalitions, and the given coalitions themselves. For queries with
/// no given coalitions, `j` carries the trade size; otherwise j is the
/// number of given coalitions (and a nonzero `j` must agree).
struct TradeQuery {
  GameRep rep;
  Classification given_type = Classification::Losing;
  std::vector<Coalition> given;
  int j = 0;
};

/// Routes a query to the right decider: for j = 2 with given coalitions,
/// the representation/column-specific algorithm (exact search on the two
/// hard cells, polynomial everywhere else); for other j or no given
/// coalitions, decide_j_trade, expanding Wm or LM representations first
/// (gated by oracle_cap).
TradeAnswer dispatch(const TradeQuery& query,
                     std::uint64_t budget = kDefaultEnumerationBudget,
                     int oracle_cap = kDefaultOracleCap);

}  // namespace sg

#endif  // SG_TRADE_HPP_
