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

#ifndef SG_ORACLE_HPP_
#define SG_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "sg/core.hpp"
#include "sg/trade.hpp"

namespace sg {

/// All 2^n coalitions in ascending mask order. Gated by cap.
std::vector<Coalition> enumerate_coalitions(int n,
                                            int cap = kDefaultOracleCap);

// Hard ceiling on the oracle's per-player count space (j+1)^n.
inline constexpr std::uint64_t kMaxOracleStates = std::uint64_t{1} << 26;

/// Definition-direct exhaustive trade search over one game, reusable
/// across queries.
///
/// Ground truth for the deciders: it enumerates, layer by layer, every
/// per-player count vector reachable by k winning (resp. losing)
/// coalitions, k = 0..j. A j-trade application exists iff the two sides
/// reach a common vector; a given side fixes the vector the opposite side
/// must reach. Work is metered in layer transitions against the budget,
/// and (j+1)^n must stay within kMaxOracleStates. Results are
/// deterministic: the smallest common count vector and, within it, the
/// smallest-mask coalition at every reconstruction step. Every returned
/// application is re-checked with verify before it leaves the oracle.
class TradeOracle {
 public:
  explicit TradeOracle(const GameRep& rep,
                       std::uint64_t budget = kDefaultOracleBudget,
                       int cap = kDefaultOracleCap);

  /// Finds a j-trade application. With `given` (all sharing one
  /// classification) only the complementary side is searched and the given
  /// coalitions appear in the result; winners always precede losers in the
  /// returned application when no coalitions were given.
  std::optional<TradeApplication> find(int j,
                                       std::span<const Coalition> given = {});

  const GameRep& game() const { return rep_; }

 private:
  struct Layers {
    std::uint64_t base = 0;               // j + 1
    std::vector<std::uint64_t> powers;    // (j+1)^p per player
    std::vector<std::vector<bool>> reach; // reach[k][state], k = 0..j
  };

  const Layers& layers_for(int j, Classification side);
  std::vector<Coalition> reconstruct(const Layers& layers,
                                     const std::vector<Coalition>& cands,
                                     int j, std::uint64_t state) const;

  GameRep rep_;
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
  std::vector<Coalition> winning_;
  std::vector<Coalition> losing_;
  std::map<std::pair<int, Classification>, Layers> cache_;
};

/// One-shot convenience wrapper around TradeOracle.
std::optional<TradeApplication> brute_force_trade(
    const GameRep& rep, int j, std::span<const Coalition> given = {},
    std::uint64_t budget = kDefaultOracleBudget, int cap = kDefaultOracleCap);

/// Deterministic random game on n <= 16 players (the same seed always
/// yields the same game): samples about 2*density*n nonempty coalitions
/// and keeps their minimal elements as the minimal winning list.
GameRep random_game(int n, std::uint64_t seed, double density = 0.3);

/// Fixture family on 2j players: minimal winning coalitions {2i, 2i+1}
/// for i = 0..j-1. Admits a j-trade application for every j >= 2.
GameRep chain_game(int j);

/// The running 4-player fixture: minimal winning coalitions {0,2}, {1,3}.
GameRep example_game();

}  // namespace sg

#endif  // SG_ORACLE_HPP_
