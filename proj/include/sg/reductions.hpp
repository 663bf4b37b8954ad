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

#ifndef SG_REDUCTIONS_HPP_
#define SG_REDUCTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "sg/core.hpp"
#include "sg/set_splitting.hpp"

namespace sg {

/// CNF formula over variables 1..num_vars; clauses hold nonzero literals,
/// negative for negated variables, in input order.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Parses DIMACS CNF text: optional comment lines (leading 'c'), one
/// "p cnf <vars> <clauses>" header, then zero-terminated clauses. Exact
/// duplicate literals within a clause are collapsed; complementary
/// literals, empty clauses, out-of-range literals, a missing terminator,
/// or a clause-count mismatch raise parse_error.
CnfFormula parse_dimacs(const std::string& text);

// Largest variable count sat_brute_force enumerates by default.
inline constexpr int kDefaultSatCap = 24;

/// First satisfying assignment in ascending binary order (index v-1 is
/// variable v), or nullopt if unsatisfiable. Throws budget_error when the
/// variable count exceeds cap.
std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& formula,
                                                 int cap = kDefaultSatCap);

/// A simple game built from a CNF formula such that the given losing
/// coalitions extend to a j-trade application iff the formula is
/// satisfiable.
///
/// Players: one per literal, a booster `a` requiring every clause to be
/// hit, a booster `b` requiring every variable to be covered, and for
/// j >= 3 one pair (c1_i, c2_i) per extra trade slot i in {3,..,j}; a
/// coalition also wins whenever it holds both members of such a pair.
struct SatGameInstance {
  GameRep game;                          // kind LM
  std::vector<Coalition> given;          // j losing coalitions
  std::vector<std::string> player_names; // player id -> display name
  int j = 2;
  int num_vars = 0;
  int num_clauses = 0;
  Player player_a = 0;
  Player player_b = 0;
  Coalition literal_players;             // all 2*num_vars literal players
  std::vector<Coalition> clause_players; // literal players per clause
  std::vector<Coalition> choice_pairs;   // {c1_i, c2_i} for i in {3,..,j}

  /// The game's defining winning predicate, independent of the coalition
  /// list; exhaustively equivalent to classify on the stored game.
  bool satisfies_winning_condition(Coalition y) const;
};

/// Builds the 2-trade instance for a formula with at least one variable
/// and one clause. The given pair is ({a, b}, all literal players).
SatGameInstance game_from_cnf(const CnfFormula& formula);

/// Builds the j-trade instance for j >= 2 (j = 2 delegates to
/// game_from_cnf). The maximal losing list grows by a factor 2^(j-2),
/// metered against budget. After construction the generator re-checks its
/// own output: the given coalitions must classify as losing and, when the
/// formula is satisfiable (and small enough to decide), the announced
/// completion must verify as a j-trade application; any failure raises
/// error.
SatGameInstance game_from_cnf_j(const CnfFormula& formula, int j,
                                std::uint64_t budget =
                                    kDefaultEnumerationBudget);

}  // namespace sg

#endif  // SG_REDUCTIONS_HPP_
