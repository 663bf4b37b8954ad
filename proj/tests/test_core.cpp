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
#include <map>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "sg/core.hpp"

namespace {

using sg::Classification;
using sg::Coalition;
using sg::GameRep;
using sg::RepKind;

bool has_violation(const sg::ValidationReport& report, const std::string& part) {
  for (const std::string& v : report.violations) {
    if (v.find(part) != std::string::npos) return true;
  }
  return false;
}

GameRep four_player_game() {
  return {4, RepKind::Wm, {Coalition::of({0, 2}), Coalition::of({1, 3})}};
}

TEST_CASE("coalition construction and member access") {
  const Coalition c = Coalition::of({0, 2, 5});
  CHECK(c.mask() == 0b100101u);
  CHECK(c.size() == 3);
  CHECK_FALSE(c.empty());
  CHECK(c.contains(0));
  CHECK_FALSE(c.contains(1));
  CHECK(c.members() == std::vector<sg::Player>{0, 2, 5});
  CHECK(Coalition{}.empty());
  CHECK(Coalition::full(3).mask() == 0b111u);
  CHECK(Coalition::full(0).empty());
  CHECK(Coalition::from_mask(0b1010u).members() == std::vector<sg::Player>{1, 3});
}

TEST_CASE("coalition set algebra") {
  const Coalition a = Coalition::of({0, 1});
  const Coalition b = Coalition::of({1, 2});
  CHECK((a | b) == Coalition::of({0, 1, 2}));
  CHECK((a & b) == Coalition::of({1}));
  CHECK((a - b) == Coalition::of({0}));
  CHECK(a.with(2) == Coalition::of({0, 1, 2}));
  CHECK(a.without(0) == Coalition::of({1}));
  CHECK(Coalition::of({1}).subset_of(a));
  CHECK(a.subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(Coalition::of({0}) < Coalition::of({1}));
}

TEST_CASE("coalition text form lists ascending members") {
  CHECK(sg::to_string(Coalition::of({0, 2})) == "{0,2}");
  CHECK(sg::to_string(Coalition{}) == "{}");
}

TEST_CASE("classification by minimal winning coalitions") {
  const GameRep rep = four_player_game();
  CHECK(sg::classify(rep, Coalition::of({0, 1, 2})) == Classification::Winning);
  CHECK(sg::classify(rep, rep.grand_coalition()) == Classification::Winning);
  CHECK(sg::classify(rep, Coalition::of({0, 1})) == Classification::Losing);
  CHECK(sg::classify(rep, Coalition::of({0, 2})) == Classification::Winning);
  CHECK(sg::classify(rep, Coalition{}) == Classification::Losing);
}

TEST_CASE("classification by maximal losing coalitions") {
  const GameRep rep = {4, RepKind::LM,
                       {Coalition::of({0, 1}), Coalition::of({2, 3})}};
  CHECK(sg::classify(rep, Coalition::of({0, 1})) == Classification::Losing);
  CHECK(sg::classify(rep, Coalition::of({0})) == Classification::Losing);
  CHECK(sg::classify(rep, Coalition::of({0, 2})) == Classification::Winning);
  CHECK(sg::classify(rep, rep.grand_coalition()) == Classification::Winning);
  CHECK(sg::classify(rep, Coalition{}) == Classification::Losing);
}

TEST_CASE("classification by explicit lists is pure membership") {
  const GameRep w = {2, RepKind::W, {Coalition::of({0}), Coalition::of({0, 1})}};
  CHECK(sg::classify(w, Coalition::of({0})) == Classification::Winning);
  CHECK(sg::classify(w, Coalition::of({1})) == Classification::Losing);
  CHECK(sg::classify(w, Coalition{}) == Classification::Losing);

  const GameRep l = {2, RepKind::L, {Coalition{}, Coalition::of({1})}};
  CHECK(sg::classify(l, Coalition::of({1})) == Classification::Losing);
  CHECK(sg::classify(l, Coalition::of({0})) == Classification::Winning);
}

TEST_CASE("classification rejects out-of-range players") {
  const GameRep rep = four_player_game();
  CHECK_THROWS_AS(sg::classify(rep, Coalition::of({4})),
                  sg::invalid_coalition_error);
  CHECK_THROWS_AS(sg::classify(rep, Coalition::of({0, 63})),
                  sg::invalid_coalition_error);
}

TEST_CASE("monotonicity of antichain classification") {
  const GameRep rep = four_player_game();
  for (std::uint64_t s = 0; s < 16; ++s) {
    for (std::uint64_t t = 0; t < 16; ++t) {
      if ((s & t) != s) continue;  // s must be a subset of t
      if (sg::classify(rep, Coalition::from_mask(s)) ==
          Classification::Winning) {
        CHECK(sg::classify(rep, Coalition::from_mask(t)) ==
              Classification::Winning);
      }
    }
  }
}

TEST_CASE("explicit winning and losing lists classify dually") {
  // The same game from its W list and from the complementary L list.
  const GameRep wm = four_player_game();
  std::vector<Coalition> w_list;
  std::vector<Coalition> l_list;
  for (std::uint64_t m = 0; m < 16; ++m) {
    const Coalition s = Coalition::from_mask(m);
    if (sg::classify(wm, s) == Classification::Winning) {
      w_list.push_back(s);
    } else {
      l_list.push_back(s);
    }
  }
  const GameRep w = {4, RepKind::W, w_list};
  const GameRep l = {4, RepKind::L, l_list};
  for (std::uint64_t m = 0; m < 16; ++m) {
    const Coalition s = Coalition::from_mask(m);
    CHECK(sg::classify(w, s) == sg::classify(l, s));
    CHECK(sg::classify(w, s) == sg::classify(wm, s));
  }
}

TEST_CASE("validation flags non-antichain minimal lists") {
  const GameRep rep = {2, RepKind::Wm,
                       {Coalition::of({0}), Coalition::of({0, 1})}};
  const auto report = sg::validate_game(rep);
  CHECK_FALSE(report.valid);
  CHECK(has_violation(report, "non-antichain"));
  CHECK(has_violation(report, "{0} is a proper subset of {0,1}"));
}

TEST_CASE("validation accepts the four player antichain game") {
  const auto report = sg::validate_game(four_player_game());
  CHECK(report.valid);
  CHECK(report.violations.empty());
}

TEST_CASE("validation accepts a monotone explicit winning list") {
  const GameRep rep = {2, RepKind::W, {Coalition::of({0, 1}), Coalition::of({0})}};
  CHECK(sg::validate_game(rep).valid);
}

TEST_CASE("validation flags duplicates") {
  const GameRep rep = {2, RepKind::Wm, {Coalition::of({0}), Coalition::of({0})}};
  const auto report = sg::validate_game(rep);
  CHECK_FALSE(report.valid);
  CHECK(has_violation(report, "duplicate"));
}

TEST_CASE("validation flags out-of-range players") {
  const GameRep rep = {2, RepKind::Wm, {Coalition::of({2})}};
  CHECK_FALSE(sg::validate_game(rep).valid);
}

TEST_CASE("validation flags an empty winning coalition") {
  const GameRep rep = {2, RepKind::Wm, {Coalition{}}};
  const auto report = sg::validate_game(rep);
  CHECK_FALSE(report.valid);
  CHECK(has_violation(report, "empty coalition"));
}

TEST_CASE("validation flags a losing grand coalition") {
  const GameRep rep = {2, RepKind::LM, {Coalition::of({0, 1})}};
  const auto report = sg::validate_game(rep);
  CHECK_FALSE(report.valid);
  CHECK(has_violation(report, "grand coalition"));
}

TEST_CASE("validation flags empty antichain lists") {
  CHECK(has_violation(sg::validate_game({2, RepKind::Wm, {}}),
                      "grand coalition loses"));
  CHECK(has_violation(sg::validate_game({2, RepKind::LM, {}}),
                      "empty coalition wins"));
}

TEST_CASE("validation of explicit lists needs the grand coalition winning") {
  const GameRep missing_n = {2, RepKind::W, {Coalition::of({0})}};
  CHECK_FALSE(sg::validate_game(missing_n).valid);

  const GameRep empty_wins = {1, RepKind::W, {Coalition{}, Coalition::of({0})}};
  CHECK_FALSE(sg::validate_game(empty_wins).valid);

  const GameRep missing_empty = {1, RepKind::L, {}};
  CHECK_FALSE(sg::validate_game(missing_empty).valid);
}

TEST_CASE("validation detects non-monotone explicit lists") {
  // {0} wins but its superset {0,1} is absent from the list.
  const GameRep rep = {3, RepKind::W,
                       {Coalition::of({0}), Coalition::of({0, 1, 2})}};
  const auto report = sg::validate_game(rep);
  CHECK_FALSE(report.valid);
  CHECK(has_violation(report, "not monotone"));

  const GameRep l = {3, RepKind::L,
                     {Coalition{}, Coalition::of({0, 1})}};
  CHECK(has_violation(sg::validate_game(l), "not monotone"));
}

TEST_CASE("monotonicity checking is skipped beyond the cap") {
  // The same non-monotone list passes when the cap rules out expansion.
  const GameRep rep = {3, RepKind::W,
                       {Coalition::of({0}), Coalition::of({0, 1, 2})}};
  CHECK(sg::validate_game(rep, /*oracle_cap=*/2).valid);
  CHECK_FALSE(sg::validate_game(rep, /*oracle_cap=*/3).valid);
}

TEST_CASE("player multiplicity counts containing coalitions") {
  const std::vector<Coalition> pair = {Coalition::of({0, 2}),
                                       Coalition::of({1, 3})};
  CHECK(sg::multiplicity(pair, 0) == 1);
  CHECK(sg::multiplicity({}, 0) == 0);
  const std::vector<Coalition> repeated = {Coalition::of({0}), Coalition::of({0}),
                                           Coalition::of({0, 1})};
  CHECK(sg::multiplicity(repeated, 0) == 3);
  CHECK(sg::multiplicity(repeated, 1) == 1);
  CHECK(sg::multiplicity(repeated, 5) == 0);
}

TEST_CASE("player count vectors match a naive tally") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    sg::PlayerCounts counts;
    std::map<sg::Player, int> naive;
    std::vector<Coalition> added;
    const int steps = 1 + static_cast<int>(rng() % 12);
    for (int i = 0; i < steps; ++i) {
      const Coalition c = Coalition::from_mask(rng() % 1024);
      counts.add(c);
      added.push_back(c);
      for (sg::Player p : c.members()) ++naive[p];
    }
    for (sg::Player p = 0; p < 10; ++p) {
      const auto it = naive.find(p);
      CHECK(counts.count(p) == (it == naive.end() ? 0 : it->second));
    }
    CHECK(counts == sg::PlayerCounts::of(added));
  }
}

TEST_CASE("player count comparison is pointwise") {
  sg::PlayerCounts a;
  a.add(Coalition::of({0}));
  a.add(Coalition::of({0, 1}));
  sg::PlayerCounts b;
  b.add(Coalition::of({0, 1}));
  b.add(Coalition::of({0, 1}));
  CHECK(a.leq(b));
  CHECK_FALSE(b.leq(a));
  CHECK(a.leq(a));
  sg::PlayerCounts c;
  c.add(Coalition::of({2}));
  CHECK_FALSE(c.leq(a));
}

TEST_CASE("error types form one family") {
  CHECK_THROWS_AS(throw sg::parse_error("x"), sg::error);
  CHECK_THROWS_AS(throw sg::budget_error("x"), sg::error);
  CHECK_THROWS_AS(throw sg::precondition_error("x"), sg::error);
  CHECK_THROWS_AS(throw sg::invalid_coalition_error("x"), sg::error);
  CHECK_THROWS_AS(throw sg::error("x"), std::runtime_error);
}

}  // namespace
