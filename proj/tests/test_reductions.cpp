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

#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "sg/convert.hpp"
#include "sg/core.hpp"
#include "sg/oracle.hpp"
#include "sg/reductions.hpp"
#include "sg/set_splitting.hpp"
#include "sg/trade.hpp"

namespace {

using sg::Classification;
using sg::CnfFormula;
using sg::Coalition;
using sg::GameRep;
using sg::RepKind;
using sg::SatGameInstance;

std::vector<Coalition> coalitions(std::initializer_list<std::uint64_t> masks) {
  std::vector<Coalition> out;
  for (std::uint64_t m : masks) out.push_back(Coalition::from_mask(m));
  return out;
}

// Small formulas used across the reduction tests.
const char kSat2[] = "p cnf 2 2\n1 2 0\n-1 -2 0\n";
const char kUnsat1[] = "p cnf 1 2\n1 0\n-1 0\n";

// Truth-table satisfiability, written independently of the library scan.
bool naive_sat(const CnfFormula& f) {
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << f.num_vars); ++bits) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool hit = false;
      for (int lit : clause) {
        const int var = lit > 0 ? lit : -lit;
        const bool value = (bits >> (var - 1)) & 1;
        hit |= (lit > 0) == value;
      }
      all &= hit;
      if (!all) break;
    }
    if (all) return true;
  }
  return f.clauses.empty();
}

TEST_CASE("dimacs parsing of plain formulas") {
  const CnfFormula two = sg::parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n");
  CHECK(two.num_vars == 2);
  REQUIRE(two.clauses.size() == 2);
  CHECK(two.clauses[0] == std::vector<int>{1, 2});
  CHECK(two.clauses[1] == std::vector<int>{-1, -2});

  const CnfFormula one = sg::parse_dimacs("p cnf 1 1\n1 0\n");
  CHECK(one.num_vars == 1);
  CHECK(one.clauses == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("dimacs parsing tolerates comments and layout") {
  const CnfFormula f = sg::parse_dimacs(
      "c a comment\nc another\np cnf 2 1\n\n  1   -2   0  \n%\n");
  CHECK(f.num_vars == 2);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2}});
  // A clause may span lines up to its terminating zero.
  const CnfFormula split = sg::parse_dimacs("p cnf 2 1\n1\n-2 0\n");
  CHECK(split.clauses == std::vector<std::vector<int>>{{1, -2}});
}

TEST_CASE("dimacs parsing rejects malformed input") {
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1\n2 0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("1 0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1\n1\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 2\n1 0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1\n0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1\n1 -1 0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1 extra\n1 0\n"), sg::parse_error);
  CHECK_THROWS_AS(sg::parse_dimacs("p cnf 1 1\nx 0\n"), sg::parse_error);
}

TEST_CASE("duplicate literals in a clause collapse") {
  const CnfFormula f = sg::parse_dimacs("p cnf 1 1\n1 1 0\n");
  CHECK(f.clauses == std::vector<std::vector<int>>{{1}});
}

TEST_CASE("truth table satisfiability scan") {
  const auto sat = sg::sat_brute_force(sg::parse_dimacs(kSat2));
  REQUIRE(sat.has_value());
  CHECK(*sat == std::vector<bool>{true, false});  // first in ascending order

  CHECK_FALSE(sg::sat_brute_force(sg::parse_dimacs(kUnsat1)).has_value());

  const CnfFormula vacuous{2, {}};
  CHECK(sg::sat_brute_force(vacuous).has_value());

  CnfFormula wide{30, {{1}}};
  CHECK_THROWS_AS(sg::sat_brute_force(wide), sg::budget_error);
}

TEST_CASE("single literal formula maps to a four player game") {
  const SatGameInstance inst =
      sg::game_from_cnf(sg::parse_dimacs("p cnf 1 1\n1 0\n"));
  CHECK(inst.game.n == 4);
  CHECK(inst.game.kind == RepKind::LM);
  CHECK(inst.game.coalitions == coalitions({0b0011, 0b0110, 0b1100}));
  CHECK(inst.given ==
        std::vector<Coalition>{Coalition::of({2, 3}), Coalition::of({0, 1})});
  CHECK(inst.player_a == 2);
  CHECK(inst.player_b == 3);
  CHECK(inst.player_names ==
        std::vector<std::string>{"x1", "~x1", "a", "b"});
  CHECK(sg::validate_game(inst.game).valid);
  for (Coalition g : inst.given) {
    CHECK(sg::classify(inst.game, g) == Classification::Losing);
  }
}

TEST_CASE("constructed games classify by the winning predicate") {
  for (const char* text : {kSat2, kUnsat1, "p cnf 1 1\n1 0\n",
                           "p cnf 3 2\n1 -2 3 0\n-1 2 0\n"}) {
    const SatGameInstance inst = sg::game_from_cnf(sg::parse_dimacs(text));
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << inst.game.n); ++m) {
      const Coalition y = Coalition::from_mask(m);
      const bool winning =
          sg::classify(inst.game, y) == Classification::Winning;
      CHECK(winning == inst.satisfies_winning_condition(y));
    }
  }
}

TEST_CASE("two coalition trades decide satisfiability") {
  const SatGameInstance sat = sg::game_from_cnf(sg::parse_dimacs(kSat2));
  const sg::TradeAnswer yes =
      sg::decide_LM_L_exact(sat.game, sat.given[0], sat.given[1]);
  CHECK(yes.decision);
  REQUIRE(yes.application.has_value());
  CHECK(sg::verify(sat.game, *yes.application));
  CHECK(sg::brute_force_trade(sat.game, 2, sat.given).has_value());

  const SatGameInstance unsat = sg::game_from_cnf(sg::parse_dimacs(kUnsat1));
  CHECK_FALSE(
      sg::decide_LM_L_exact(unsat.game, unsat.given[0], unsat.given[1])
          .decision);
  CHECK_FALSE(sg::brute_force_trade(unsat.game, 2, unsat.given).has_value());
}

TEST_CASE("formula construction rejects degenerate input") {
  CHECK_THROWS_AS(sg::game_from_cnf({0, {}}), sg::precondition_error);
  CHECK_THROWS_AS(sg::game_from_cnf({1, {}}), sg::precondition_error);
  CHECK_THROWS_AS(sg::game_from_cnf({1, {{1, -1}}}), sg::precondition_error);
  CHECK_THROWS_AS(sg::game_from_cnf({1, {{}}}), sg::precondition_error);
  CHECK_THROWS_AS(sg::game_from_cnf({1, {{2}}}), sg::precondition_error);
  CHECK_THROWS_AS(sg::game_from_cnf_j({1, {{1}}}, 1), sg::precondition_error);
}

TEST_CASE("wider instances delegate and extend the two trade form") {
  const CnfFormula f = sg::parse_dimacs(kSat2);
  const SatGameInstance two = sg::game_from_cnf_j(f, 2);
  const SatGameInstance base = sg::game_from_cnf(f);
  CHECK(two.game.coalitions == base.game.coalitions);
  CHECK(two.given == base.given);

  const SatGameInstance three = sg::game_from_cnf_j(f, 3);
  CHECK(three.game.n == 8);
  CHECK(three.given ==
        std::vector<Coalition>{Coalition::of({0, 1, 2, 3}),
                               Coalition::of({4, 6}), Coalition::of({5, 7})});
  CHECK(three.choice_pairs == std::vector<Coalition>{Coalition::of({6, 7})});

  const SatGameInstance four = sg::game_from_cnf_j(f, 4);
  CHECK(four.game.n == 10);
  CHECK(four.given ==
        std::vector<Coalition>{Coalition::of({0, 1, 2, 3}),
                               Coalition::of({4, 5}), Coalition::of({6, 8}),
                               Coalition::of({7, 9})});
}

TEST_CASE("wider instances keep the given side losing and decidable") {
  for (int j : {3, 4}) {
    for (const char* text : {kSat2, kUnsat1}) {
      const SatGameInstance inst =
          sg::game_from_cnf_j(sg::parse_dimacs(text), j);
      CHECK(static_cast<int>(inst.given.size()) == j);
      CHECK(sg::validate_game(inst.game).valid);
      for (Coalition g : inst.given) {
        CHECK(sg::classify(inst.game, g) == Classification::Losing);
      }
      const sg::TradeAnswer answer = sg::dispatch(
          {inst.game, Classification::Losing, inst.given, 0});
      CHECK(answer.decision == naive_sat(sg::parse_dimacs(text)));
      if (answer.decision) {
        REQUIRE(answer.application.has_value());
        CHECK(sg::verify(inst.game, *answer.application));
      }
    }
  }
}

TEST_CASE("choice pairs are winning and their halves are not") {
  const SatGameInstance inst =
      sg::game_from_cnf_j(sg::parse_dimacs(kSat2), 4);
  for (Coalition pair : inst.choice_pairs) {
    CHECK(sg::classify(inst.game, pair) == Classification::Winning);
    for (sg::Player p : pair.members()) {
      CHECK(sg::classify(inst.game, Coalition::of({p})) ==
            Classification::Losing);
    }
  }
}

TEST_CASE("odd and even trade widths agree with satisfiability") {
  // Every nonempty subset of the clauses over one variable.
  const std::vector<std::vector<std::vector<int>>> clause_sets = {
      {{1}}, {{-1}}, {{1}, {-1}}};
  for (const auto& clauses : clause_sets) {
    const CnfFormula f{1, clauses};
    const bool expected = naive_sat(f);
    for (int j : {2, 3, 5}) {
      const SatGameInstance inst = sg::game_from_cnf_j(f, j);
      const sg::TradeAnswer answer = sg::dispatch(
          {inst.game, Classification::Losing, inst.given, 0});
      CHECK(answer.decision == expected);
    }
  }
}

TEST_CASE("set splitting instances from losing pairs") {
  const GameRep rep = {4, RepKind::LM,
                       {Coalition::of({0, 1}), Coalition::of({2, 3})}};
  const sg::SetSplittingInstance inst = sg::build_set_splitting(
      rep, Coalition::of({0, 1}), Coalition::of({2, 3}));
  CHECK(inst.universe == Coalition::of({0, 1, 2, 3}));
  CHECK(inst.family ==
        std::vector<Coalition>{Coalition::of({2, 3}), Coalition::of({0, 1})});
  CHECK(inst.k == 2);
  CHECK(inst.family.size() <= rep.coalitions.size());
}

TEST_CASE("set splitting with both givens equal to one maximal set") {
  const GameRep rep = {4, RepKind::LM,
                       {Coalition::of({0, 1}), Coalition::of({2, 3})}};
  const sg::SetSplittingInstance inst = sg::build_set_splitting(
      rep, Coalition::of({0, 1}), Coalition::of({0, 1}));
  // The set's own complement inside the union is empty and cannot split.
  CHECK(std::count(inst.family.begin(), inst.family.end(), Coalition{}) == 1);
  CHECK_FALSE(sg::solve_set_splitting(inst).has_value());
}

TEST_CASE("set splitting construction requires losing coalitions") {
  const GameRep rep = {2, RepKind::LM, {Coalition::of({0})}};
  CHECK_THROWS_AS(
      sg::build_set_splitting(rep, Coalition{}, Coalition::of({1})),
      sg::precondition_error);
}

TEST_CASE("set splitting search finds full splits") {
  const sg::SetSplittingInstance inst = {
      Coalition::of({0, 1, 2, 3}),
      {Coalition::of({2, 3}), Coalition::of({0, 1})},
      2};
  const auto part = sg::solve_set_splitting(inst);
  REQUIRE(part.has_value());
  CHECK((part->first | part->second) == inst.universe);
  CHECK((part->first & part->second).empty());
  for (Coalition z : inst.family) {
    CHECK_FALSE((z & part->first).empty());
    CHECK_FALSE((z & part->second).empty());
  }
}

TEST_CASE("set splitting search reports impossible families") {
  CHECK_FALSE(sg::solve_set_splitting({Coalition::of({0}), {Coalition{}}, 1})
                  .has_value());
  CHECK_FALSE(
      sg::solve_set_splitting({Coalition::of({0}), {Coalition::of({0})}, 1})
          .has_value());
}

TEST_CASE("set splitting search is capped") {
  const sg::SetSplittingInstance wide = {Coalition::full(30),
                                         {Coalition::of({0, 1})},
                                         1};
  CHECK_THROWS_AS(sg::solve_set_splitting(wide, /*cap=*/24), sg::budget_error);
}

TEST_CASE("satisfiability equivalence on every small formula") {
  // All clause sets of size one or two over two variables.
  std::vector<std::vector<int>> clauses;
  for (int v = 1; v <= 2; ++v) {
    clauses.push_back({v});
    clauses.push_back({-v});
  }
  for (int s1 : {1, -1}) {
    for (int s2 : {2, -2}) clauses.push_back({s1, s2});
  }
  REQUIRE(clauses.size() == 8);
  std::vector<CnfFormula> formulas;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    formulas.push_back({2, {clauses[i]}});
    for (std::size_t k = i + 1; k < clauses.size(); ++k) {
      formulas.push_back({2, {clauses[i], clauses[k]}});
    }
  }
  REQUIRE(formulas.size() == 36);
  for (const CnfFormula& f : formulas) {
    const bool expected = naive_sat(f);
    CHECK(sg::sat_brute_force(f).has_value() == expected);
    const SatGameInstance inst = sg::game_from_cnf(f);
    CHECK(sg::decide_LM_L_exact(inst.game, inst.given[0], inst.given[1])
              .decision == expected);
    CHECK(sg::brute_force_trade(inst.game, 2, inst.given).has_value() ==
          expected);
  }
}

}  // namespace
