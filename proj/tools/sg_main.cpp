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

// Command line front end for the sgtrade library.
//
// Exit codes: 0 = yes / success, 1 = no, 2 = usage, parse, or precondition
// error, 3 = resource budget exceeded.

#include <bit>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sg/convert.hpp"
#include "sg/core.hpp"
#include "sg/json_io.hpp"
#include "sg/oracle.hpp"
#include "sg/reductions.hpp"
#include "sg/set_splitting.hpp"
#include "sg/trade.hpp"

namespace {

using nlohmann::json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump() + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw sg::error("cannot open output file: " + out_path);
    out << text;
  }
}

// Game documents are either a bare game object or a wrapper {"game": ...,
// "given": ...} as produced by gen-sat; the wrapper's given list is used by
// decide/oracle when no --given flag is passed.
struct GameDoc {
  sg::GameRep rep;
  std::vector<sg::Coalition> embedded_given;
};

GameDoc load_game(const std::string& path) {
  const json doc = sg::read_json_file(path);
  GameDoc loaded{sg::game_from_json(doc.contains("game") ? doc.at("game") : doc), {}};
  if (doc.contains("given")) {
    if (!doc.at("given").is_array()) throw sg::parse_error("\"given\" must be an array");
    for (const json& item : doc.at("given")) {
      loaded.embedded_given.push_back(sg::coalition_from_json(item, loaded.rep.n));
    }
  }
  return loaded;
}

std::vector<sg::Coalition> parse_given(const std::string& text, int n) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw sg::parse_error(std::string("cannot parse --given: ") + e.what());
  }
  if (!doc.is_array()) throw sg::parse_error("--given must be a JSON array of coalitions");
  std::vector<sg::Coalition> given;
  for (const json& item : doc) given.push_back(sg::coalition_from_json(item, n));
  return given;
}

json application_or_null(const std::optional<sg::TradeApplication>& app) {
  return app ? sg::application_to_json(*app) : json(nullptr);
}

int run_validate(const std::string& game_path) {
  const json doc = sg::read_json_file(game_path);
  const sg::GameRep rep =
      sg::game_from_json(doc.contains("game") ? doc.at("game") : doc);
  const sg::ValidationReport report = sg::validate_game(rep);
  json out;
  out["valid"] = report.valid;
  out["violations"] = report.violations;
  emit(out, "");
  return report.valid ? kExitYes : kExitUsage;
}

int run_convert(const std::string& game_path, const std::string& to,
                const std::string& out_path) {
  sg::RepKind kind;
  if (to == "W") {
    kind = sg::RepKind::W;
  } else if (to == "L") {
    kind = sg::RepKind::L;
  } else if (to == "Wm") {
    kind = sg::RepKind::Wm;
  } else if (to == "LM") {
    kind = sg::RepKind::LM;
  } else {
    throw sg::precondition_error("--to must be one of W, L, Wm, LM");
  }
  const GameDoc loaded = load_game(game_path);
  emit(sg::game_to_json(sg::convert_game(loaded.rep, kind)), out_path);
  return kExitYes;
}

int run_decide(const std::string& game_path, const std::string& beta,
               const std::string& given_text, int j, std::int64_t budget,
               const std::string& out_path) {
  const GameDoc loaded = load_game(game_path);
  sg::TradeQuery query{loaded.rep, sg::Classification::Losing, {}, j};
  std::vector<sg::Coalition> given;
  if (!given_text.empty()) {
    given = parse_given(given_text, loaded.rep.n);
  } else if (!loaded.embedded_given.empty() && j == 0) {
    given = loaded.embedded_given;
  }
  if (!given.empty()) {
    if (beta.empty()) {
      throw sg::precondition_error("--beta is required when coalitions are given");
    }
    if (beta != "W" && beta != "L") {
      throw sg::precondition_error("--beta must be W or L");
    }
    query.given_type =
        beta == "W" ? sg::Classification::Winning : sg::Classification::Losing;
    query.given = given;
    query.j = static_cast<int>(given.size());
  } else if (j < 1) {
    throw sg::precondition_error("either --given or --j >= 1 is required");
  }
  const sg::TradeAnswer answer = sg::dispatch(query, budget);
  json out;
  out["decision"] = answer.decision;
  out["witness"] = json::array();
  for (sg::Coalition c : answer.witness) out["witness"].push_back(sg::coalition_to_json(c));
  out["application"] = application_or_null(answer.application);
  emit(out, out_path);
  return answer.decision ? kExitYes : kExitNo;
}

int run_oracle(const std::string& game_path, const std::string& given_text,
               int j, std::int64_t budget, const std::string& out_path) {
  const GameDoc loaded = load_game(game_path);
  std::vector<sg::Coalition> given;
  if (!given_text.empty()) {
    given = parse_given(given_text, loaded.rep.n);
  } else if (!loaded.embedded_given.empty()) {
    given = loaded.embedded_given;
  }
  if (!given.empty() && j == 0) j = static_cast<int>(given.size());
  if (j < 1) throw sg::precondition_error("--j >= 1 is required");
  const std::optional<sg::TradeApplication> app =
      sg::brute_force_trade(loaded.rep, j, given, budget);
  json out;
  out["found"] = app.has_value();
  out["application"] = application_or_null(app);
  emit(out, out_path);
  return app ? kExitYes : kExitNo;
}

int run_gen_sat(const std::string& cnf_path, int j, std::int64_t budget,
                const std::string& out_path) {
  std::ifstream in(cnf_path, std::ios::binary);
  if (!in) throw sg::error("cannot open CNF file: " + cnf_path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  const sg::CnfFormula formula = sg::parse_dimacs(text);
  const sg::SatGameInstance inst = sg::game_from_cnf_j(formula, j, budget);
  emit(sg::sat_instance_to_json(inst), out_path);
  return kExitYes;
}

int run_solve_split(const std::string& instance_path, std::int64_t budget,
                    const std::string& out_path) {
  const sg::SetSplittingInstance inst =
      sg::split_instance_from_json(sg::read_json_file(instance_path));
  const int cap = static_cast<int>(std::min<std::uint64_t>(
      std::bit_width(static_cast<std::uint64_t>(std::max<std::int64_t>(budget, 1))),
      62));
  const auto partition = sg::solve_set_splitting(inst, cap);
  json out;
  out["decision"] = partition.has_value();
  if (partition) {
    out["partition"] = json::array({sg::coalition_to_json(partition->first),
                                    sg::coalition_to_json(partition->second)});
  } else {
    out["partition"] = nullptr;
  }
  emit(out, out_path);
  return partition ? kExitYes : kExitNo;
}

int run_gen_random(int n, std::uint64_t seed, double density,
                   const std::string& out_path) {
  emit(sg::game_to_json(sg::random_game(n, seed, density)), out_path);
  return kExitYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trade decision tools for simple games"};
  app.require_subcommand(1);

  std::string game_path;
  std::string out_path;
  std::string beta;
  std::string given_text;
  std::string to_kind;
  std::string cnf_path;
  std::string instance_path;
  int j = 0;
  int sat_j = 2;
  int n = 0;
  std::uint64_t seed = 0;
  double density = 0.3;
  std::int64_t budget = sg::kDefaultEnumerationBudget;
  std::int64_t oracle_budget = sg::kDefaultOracleBudget;

  CLI::App* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("game", game_path, "game JSON file")->required();

  CLI::App* convert = app.add_subcommand("convert", "Convert between representations");
  convert->add_option("game", game_path, "game JSON file")->required();
  convert->add_option("--to", to_kind, "target kind: W, L, Wm, LM")->required();
  convert->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* decide = app.add_subcommand("decide", "Decide a trade instance");
  decide->add_option("game", game_path, "game JSON file")->required();
  decide->add_option("--beta", beta, "classification of the given coalitions: W or L");
  decide->add_option("--given", given_text, "given coalitions as a JSON array");
  decide->add_option("--j", j, "number of coalitions when none are given");
  decide->add_option("--budget", budget, "enumeration budget")->envname("SG_BUDGET");
  decide->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* oracle = app.add_subcommand("oracle", "Decide by exhaustive search");
  oracle->add_option("game", game_path, "game JSON file")->required();
  oracle->add_option("--given", given_text, "given coalitions as a JSON array");
  oracle->add_option("--j", j, "number of coalitions");
  oracle->add_option("--budget", oracle_budget, "search budget");
  oracle->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* gen_sat = app.add_subcommand("gen-sat", "Build a trade instance from a CNF");
  gen_sat->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  gen_sat->add_option("--j", sat_j, "number of trade coalitions (default 2)");
  gen_sat->add_option("--budget", budget, "construction budget")->envname("SG_BUDGET");
  gen_sat->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* solve_split = app.add_subcommand("solve-split", "Solve a set splitting instance");
  solve_split->add_option("--instance", instance_path, "instance JSON file")->required();
  solve_split->add_option("--budget", budget, "search budget")->envname("SG_BUDGET");
  solve_split->add_option("-o", out_path, "output file (default stdout)");

  CLI::App* gen_random = app.add_subcommand("gen-random", "Generate a seeded random game");
  gen_random->add_option("--n", n, "number of players (1..16)")->required();
  gen_random->add_option("--seed", seed, "random seed")->required();
  gen_random->add_option("--density", density, "sampling density (default 0.3)");
  gen_random->add_option("-o", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return run_validate(game_path);
    if (convert->parsed()) return run_convert(game_path, to_kind, out_path);
    if (decide->parsed())
      return run_decide(game_path, beta, given_text, j, budget, out_path);
    if (oracle->parsed())
      return run_oracle(game_path, given_text, j, oracle_budget, out_path);
    if (gen_sat->parsed()) return run_gen_sat(cnf_path, sat_j, budget, out_path);
    if (solve_split->parsed()) return run_solve_split(instance_path, budget, out_path);
    if (gen_random->parsed()) return run_gen_random(n, seed, density, out_path);
  } catch (const sg::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const sg::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sg::invalid_coalition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sg::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
