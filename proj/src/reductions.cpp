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

#include "sg/reductions.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "sg/convert.hpp"
#include "sg/trade.hpp"

namespace sg {
namespace {

Player literal_player(int var, bool positive) {
  return 2 * (var - 1) + (positive ? 0 : 1);
}

// Pair players for trade slot i in {3,..,j}: which is 1 or 2.
Player pair_player(int num_vars, int slot, int which) {
  return 2 * num_vars + 2 + 2 * (slot - 3) + (which - 1);
}

std::string pair_player_name(int slot, int which) {
  return "c" + std::to_string(which) + "_" + std::to_string(slot);
}

void self_check(const SatGameInstance& inst, const CnfFormula& formula) {
  const auto fail = [](const std::string& why) {
    throw error("generator self-check failed: " + why);
  };
  if (!validate_game(inst.game).valid) {
    fail("constructed list is not a valid maximal losing representation");
  }
  for (Coalition g : inst.given) {
    if (classify(inst.game, g) != Classification::Losing) {
      fail("given coalition " + to_string(g) + " is not losing");
    }
  }
  for (Coalition pair : inst.choice_pairs) {
    if (classify(inst.game, pair) != Classification::Winning) {
      fail("pair coalition " + to_string(pair) + " is not winning");
    }
  }
  // The coalition list must realize the defining predicate exactly.
  if (inst.game.n <= 16) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inst.game.n);
         ++mask) {
      const Coalition y = Coalition::from_mask(mask);
      const bool listed_winning =
          classify(inst.game, y) == Classification::Winning;
      if (listed_winning != inst.satisfies_winning_condition(y)) {
        fail("coalition " + to_string(y) +
             " disagrees with the winning predicate");
      }
    }
  }
  if (inst.num_vars > 20) return;
  const auto assignment = sat_brute_force(formula);
  if (!assignment) return;
  // A satisfying assignment must yield a complete application: the booster
  // coalitions built from the true literals plus one coalition per pair.
  Coalition true_literals;
  for (int v = 1; v <= inst.num_vars; ++v) {
    true_literals = true_literals.with(literal_player(v, (*assignment)[v - 1]));
  }
  std::vector<Coalition> winning;
  winning.push_back(true_literals.with(inst.player_a));
  winning.push_back((inst.literal_players - true_literals).with(inst.player_b));
  for (Coalition pair : inst.choice_pairs) winning.push_back(pair);
  TradeApplication app;
  app.j = inst.j;
  app.coalitions = inst.given;
  app.coalitions.insert(app.coalitions.end(), winning.begin(), winning.end());
  for (int i = 0; i < inst.j; ++i) app.winners.push_back(inst.j + i);
  if (!verify(inst.game, app)) {
    fail("the completion announced for a satisfiable formula does not verify");
  }
}

SatGameInstance build_instance(const CnfFormula& formula, int j,
                               std::uint64_t budget) {
  if (formula.num_vars < 1 || formula.clauses.empty()) {
    throw precondition_error(
        "game_from_cnf: formula needs at least one variable and one clause");
  }
  for (const std::vector<int>& clause : formula.clauses) {
    if (clause.empty()) {
      throw precondition_error("game_from_cnf: empty clause");
    }
    for (int lit : clause) {
      if (lit == 0 || std::abs(lit) > formula.num_vars) {
        throw precondition_error("game_from_cnf: literal out of range");
      }
      if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
        throw precondition_error(
            "game_from_cnf: clause contains complementary literals");
      }
    }
  }
  if (j < 2) {
    throw precondition_error("game_from_cnf: j must be at least 2");
  }
  const int num_vars = formula.num_vars;
  const int num_clauses = static_cast<int>(formula.clauses.size());
  const int n = 2 * num_vars + 2 + 2 * (j - 2);
  if (n > kMaxPlayers) {
    throw precondition_error("game_from_cnf: instance needs " +
                             std::to_string(n) + " players, more than " +
                             std::to_string(kMaxPlayers));
  }

  SatGameInstance inst;
  inst.j = j;
  inst.num_vars = num_vars;
  inst.num_clauses = num_clauses;
  inst.player_a = 2 * num_vars;
  inst.player_b = 2 * num_vars + 1;
  for (int v = 1; v <= num_vars; ++v) {
    inst.literal_players = inst.literal_players.with(literal_player(v, true))
                               .with(literal_player(v, false));
  }
  for (const std::vector<int>& clause : formula.clauses) {
    Coalition members;
    for (int lit : clause) {
      members = members.with(literal_player(std::abs(lit), lit > 0));
    }
    inst.clause_players.push_back(members);
  }
  for (int slot = 3; slot <= j; ++slot) {
    inst.choice_pairs.push_back(
        Coalition::of({pair_player(num_vars, slot, 1),
                       pair_player(num_vars, slot, 2)}));
  }

  inst.player_names.resize(n);
  for (int v = 1; v <= num_vars; ++v) {
    inst.player_names[literal_player(v, true)] = "x" + std::to_string(v);
    inst.player_names[literal_player(v, false)] = "~x" + std::to_string(v);
  }
  inst.player_names[inst.player_a] = "a";
  inst.player_names[inst.player_b] = "b";
  for (int slot = 3; slot <= j; ++slot) {
    inst.player_names[pair_player(num_vars, slot, 1)] =
        pair_player_name(slot, 1);
    inst.player_names[pair_player(num_vars, slot, 2)] =
        pair_player_name(slot, 2);
  }

  // Maximal losing candidates: one reason each against the two booster
  // conditions (drop the booster, or empty one clause, or empty one
  // variable), intersected with one dropped player from every pair.
  const Coalition everyone = Coalition::full(n);
  std::vector<Coalition> bases;
  bases.push_back(everyone.without(inst.player_a).without(inst.player_b));
  for (Coalition clause : inst.clause_players) {
    bases.push_back((everyone - clause).without(inst.player_b));
  }
  for (int v = 1; v <= num_vars; ++v) {
    bases.push_back(everyone.without(inst.player_a)
                        .without(literal_player(v, true))
                        .without(literal_player(v, false)));
  }
  for (Coalition clause : inst.clause_players) {
    for (int v = 1; v <= num_vars; ++v) {
      bases.push_back(((everyone - clause))
                          .without(literal_player(v, true))
                          .without(literal_player(v, false)));
    }
  }

  const int free_slots = j - 2;
  std::vector<Coalition> candidates;
  std::uint64_t produced = 0;
  for (Coalition base : bases) {
    for (std::uint64_t choice = 0;
         choice < (std::uint64_t{1} << free_slots); ++choice) {
      if (++produced > budget) {
        throw budget_error(
            "game_from_cnf: candidate list exceeds the budget of " +
            std::to_string(budget));
      }
      Coalition cand = base;
      for (int s = 0; s < free_slots; ++s) {
        const int which = ((choice >> s) & 1) ? 2 : 1;
        cand = cand.without(pair_player(num_vars, s + 3, which));
      }
      candidates.push_back(cand);
    }
  }
  inst.game = GameRep{n, RepKind::LM, maximal_elements(std::move(candidates))};

  if (j == 2) {
    inst.given = {Coalition::of({inst.player_a, inst.player_b}),
                  inst.literal_players};
  } else if (j % 2 == 0) {
    inst.given.push_back(inst.literal_players);
    inst.given.push_back(Coalition::of({inst.player_a, inst.player_b}));
    for (int i = 3; i <= j; ++i) {
      if (i % 2 == 1) {
        inst.given.push_back(Coalition::of({pair_player(num_vars, i, 1),
                                            pair_player(num_vars, i + 1, 1)}));
      } else {
        inst.given.push_back(Coalition::of({pair_player(num_vars, i - 1, 2),
                                            pair_player(num_vars, i, 2)}));
      }
    }
  } else {
    inst.given.push_back(inst.literal_players);
    inst.given.push_back(
        Coalition::of({inst.player_a, pair_player(num_vars, j, 1)}));
    for (int i = 3; i <= j - 1; ++i) {
      if (i % 2 == 1) {
        inst.given.push_back(Coalition::of({pair_player(num_vars, i, 1),
                                            pair_player(num_vars, i + 1, 1)}));
      } else {
        inst.given.push_back(Coalition::of({pair_player(num_vars, i - 1, 2),
                                            pair_player(num_vars, i, 2)}));
      }
    }
    inst.given.push_back(
        Coalition::of({inst.player_b, pair_player(num_vars, j, 2)}));
  }

  self_check(inst, formula);
  return inst;
}

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula formula;
  bool header_seen = false;
  int declared_clauses = 0;
  std::vector<int> current;
  bool closed_last = true;

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream tokens(line);
    std::string first;
    if (!(tokens >> first)) continue;
    if (first[0] == 'c' || first[0] == '%') continue;
    if (!header_seen) {
      if (first != "p") {
        throw parse_error("dimacs: expected 'p cnf' header before clauses");
      }
      std::string fmt;
      if (!(tokens >> fmt) || fmt != "cnf" ||
          !(tokens >> formula.num_vars >> declared_clauses) ||
          formula.num_vars < 0 || declared_clauses < 0) {
        throw parse_error("dimacs: malformed 'p cnf <vars> <clauses>' header");
      }
      std::string extra;
      if (tokens >> extra) {
        throw parse_error("dimacs: trailing tokens after header");
      }
      header_seen = true;
      continue;
    }
    // Re-scan the whole line as integers, including the first token.
    std::istringstream ints(line);
    int lit = 0;
    while (ints >> lit) {
      if (lit == 0) {
        if (current.empty()) {
          throw parse_error("dimacs: empty clause");
        }
        formula.clauses.push_back(current);
        current.clear();
        closed_last = true;
        continue;
      }
      closed_last = false;
      if (std::abs(lit) > formula.num_vars) {
        throw parse_error("dimacs: literal " + std::to_string(lit) +
                          " out of range for " +
                          std::to_string(formula.num_vars) + " variables");
      }
      if (std::find(current.begin(), current.end(), -lit) != current.end()) {
        throw parse_error("dimacs: clause mixes a literal and its negation");
      }
      if (std::find(current.begin(), current.end(), lit) == current.end()) {
        current.push_back(lit);
      }
    }
    if (!ints.eof()) {
      throw parse_error("dimacs: unexpected token in clause section");
    }
  }
  if (!header_seen) {
    throw parse_error("dimacs: missing 'p cnf' header");
  }
  if (!closed_last || !current.empty()) {
    throw parse_error("dimacs: last clause is missing its '0' terminator");
  }
  if (static_cast<int>(formula.clauses.size()) != declared_clauses) {
    throw parse_error("dimacs: header declares " +
                      std::to_string(declared_clauses) + " clauses but " +
                      std::to_string(formula.clauses.size()) + " were given");
  }
  return formula;
}

std::optional<std::vector<bool>> sat_brute_force(const CnfFormula& formula,
                                                 int cap) {
  if (formula.num_vars > cap) {
    throw budget_error("sat_brute_force: " + std::to_string(formula.num_vars) +
                       " variables exceed the cap of " + std::to_string(cap));
  }
  for (std::uint64_t assignment = 0;
       assignment < (std::uint64_t{1} << formula.num_vars); ++assignment) {
    bool all_satisfied = true;
    for (const std::vector<int>& clause : formula.clauses) {
      bool satisfied = false;
      for (int lit : clause) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1;
        if ((lit > 0) == value) {
          satisfied = true;
          break;
        }
      }
      if (!satisfied) {
        all_satisfied = false;
        break;
      }
    }
    if (all_satisfied) {
      std::vector<bool> out(formula.num_vars);
      for (int v = 1; v <= formula.num_vars; ++v) {
        out[v - 1] = (assignment >> (v - 1)) & 1;
      }
      return out;
    }
  }
  return std::nullopt;
}

bool SatGameInstance::satisfies_winning_condition(Coalition y) const {
  bool clause_booster = y.contains(player_a);
  for (Coalition clause : clause_players) {
    if (!clause_booster) break;
    clause_booster = !(y & clause).empty();
  }
  bool variable_booster = y.contains(player_b);
  for (int v = 1; v <= num_vars && variable_booster; ++v) {
    const Coalition var_pair = Coalition::of(
        {literal_player(v, true), literal_player(v, false)});
    variable_booster = !(y & var_pair).empty();
  }
  if (clause_booster || variable_booster) return true;
  for (Coalition pair : choice_pairs) {
    if (pair.subset_of(y)) return true;
  }
  return false;
}

SatGameInstance game_from_cnf(const CnfFormula& formula) {
  return build_instance(formula, 2, kDefaultEnumerationBudget);
}

SatGameInstance game_from_cnf_j(const CnfFormula& formula, int j,
                                std::uint64_t budget) {
  return build_instance(formula, j, budget);
}

}  // namespace sg
