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

#include "sg/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "sg/convert.hpp"

namespace sg {
namespace {

TradeApplication assemble_application(const std::vector<Coalition>& winning,
                                      const std::vector<Coalition>& losing,
                                      bool winning_first) {
  TradeApplication app;
  app.j = static_cast<int>(winning.size());
  if (winning_first) {
    app.coalitions = winning;
    app.coalitions.insert(app.coalitions.end(), losing.begin(), losing.end());
    for (int i = 0; i < app.j; ++i) app.winners.push_back(i);
  } else {
    app.coalitions = losing;
    app.coalitions.insert(app.coalitions.end(), winning.begin(),
                          winning.end());
    for (int i = 0; i < app.j; ++i) app.winners.push_back(app.j + i);
  }
  return app;
}

}  // namespace

std::vector<Coalition> enumerate_coalitions(int n, int cap) {
  if (n < 0 || n > kMaxPlayers) {
    throw precondition_error("enumerate_coalitions: n out of range");
  }
  if (n > cap) {
    throw budget_error("enumerate_coalitions: n=" + std::to_string(n) +
                       " exceeds the cap of " + std::to_string(cap));
  }
  std::vector<Coalition> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(Coalition::from_mask(mask));
  }
  return out;
}

TradeOracle::TradeOracle(const GameRep& rep, std::uint64_t budget, int cap)
    : rep_(rep), budget_(budget) {
  const ValidationReport report = validate_game(rep, cap);
  if (!report.valid) {
    std::string msg = "TradeOracle: invalid game";
    for (const std::string& v : report.violations) msg += "; " + v;
    throw precondition_error(msg);
  }
  for (Coalition c : enumerate_coalitions(rep.n, cap)) {
    (classify(rep_, c) == Classification::Winning ? winning_ : losing_)
        .push_back(c);
  }
}

const TradeOracle::Layers& TradeOracle::layers_for(int j,
                                                   Classification side) {
  const auto key = std::make_pair(j, side);
  const auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  Layers layers;
  layers.base = static_cast<std::uint64_t>(j) + 1;
  layers.powers.resize(rep_.n);
  std::uint64_t states = 1;
  for (int p = 0; p < rep_.n; ++p) {
    layers.powers[p] = states;
    if (states > kMaxOracleStates / layers.base) {
      throw budget_error(
          "TradeOracle: per-player count space (j+1)^n exceeds " +
          std::to_string(kMaxOracleStates));
    }
    states *= layers.base;
  }

  const std::vector<Coalition>& cands =
      side == Classification::Winning ? winning_ : losing_;
  layers.reach.assign(j + 1, std::vector<bool>(states, false));
  layers.reach[0][0] = true;
  for (int k = 0; k < j; ++k) {
    const std::vector<bool>& cur = layers.reach[k];
    std::vector<bool>& next = layers.reach[k + 1];
    for (std::uint64_t s = 0; s < states; ++s) {
      if (!cur[s]) continue;
      for (Coalition c : cands) {
        if (++used_ > budget_) {
          throw budget_error("TradeOracle: transition budget of " +
                             std::to_string(budget_) + " exceeded");
        }
        std::uint64_t delta = 0;
        bool addable = true;
        for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
          const int p = std::countr_zero(m);
          if ((s / layers.powers[p]) % layers.base ==
              static_cast<std::uint64_t>(j)) {
            addable = false;
            break;
          }
          delta += layers.powers[p];
        }
        if (addable) next[s + delta] = true;
      }
    }
  }
  return cache_.emplace(key, std::move(layers)).first->second;
}

std::vector<Coalition> TradeOracle::reconstruct(
    const Layers& layers, const std::vector<Coalition>& cands, int j,
    std::uint64_t state) const {
  std::vector<Coalition> out;
  std::uint64_t s = state;
  for (int k = j; k >= 1; --k) {
    bool stepped = false;
    for (Coalition c : cands) {
      std::uint64_t delta = 0;
      bool removable = true;
      for (std::uint64_t m = c.mask(); m != 0; m &= m - 1) {
        const int p = std::countr_zero(m);
        if ((s / layers.powers[p]) % layers.base == 0) {
          removable = false;
          break;
        }
        delta += layers.powers[p];
      }
      if (!removable) continue;
      if (layers.reach[k - 1][s - delta]) {
        out.push_back(c);
        s -= delta;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw error("TradeOracle: reconstruction lost its path");
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<TradeApplication> TradeOracle::find(
    int j, std::span<const Coalition> given) {
  if (j < 1) {
    throw precondition_error("TradeOracle: j must be at least 1");
  }
  if (!given.empty() && static_cast<int>(given.size()) != j) {
    throw precondition_error("TradeOracle: expected exactly j given "
                             "coalitions");
  }

  if (!given.empty()) {
    const Classification type = classify(rep_, given[0]);
    for (Coalition g : given) {
      if (classify(rep_, g) != type) {
        throw precondition_error(
            "TradeOracle: given coalitions must share one classification");
      }
    }
    const Classification opposite = type == Classification::Winning
                                        ? Classification::Losing
                                        : Classification::Winning;
    const Layers& layers = layers_for(j, opposite);
    std::uint64_t target = 0;
    for (Coalition g : given) {
      for (std::uint64_t m = g.mask(); m != 0; m &= m - 1) {
        target += layers.powers[std::countr_zero(m)];
      }
    }
    if (!layers.reach[j][target]) return std::nullopt;
    const std::vector<Coalition>& cands =
        opposite == Classification::Winning ? winning_ : losing_;
    const std::vector<Coalition> other =
        reconstruct(layers, cands, j, target);
    const std::vector<Coalition> given_vec(given.begin(), given.end());
    TradeApplication app;
    app.j = j;
    app.coalitions = given_vec;
    app.coalitions.insert(app.coalitions.end(), other.begin(), other.end());
    for (int i = 0; i < j; ++i) {
      app.winners.push_back(type == Classification::Winning ? i : j + i);
    }
    if (!verify(rep_, app)) {
      throw error("TradeOracle: reconstructed application failed to verify");
    }
    return app;
  }

  const Layers& win_layers = layers_for(j, Classification::Winning);
  const Layers& lose_layers = layers_for(j, Classification::Losing);
  const std::uint64_t states = win_layers.reach[j].size();
  for (std::uint64_t s = 0; s < states; ++s) {
    if (!win_layers.reach[j][s] || !lose_layers.reach[j][s]) continue;
    const std::vector<Coalition> winning =
        reconstruct(win_layers, winning_, j, s);
    const std::vector<Coalition> losing =
        reconstruct(lose_layers, losing_, j, s);
    const TradeApplication app =
        assemble_application(winning, losing, /*winning_first=*/true);
    if (!verify(rep_, app)) {
      throw error("TradeOracle: reconstructed application failed to verify");
    }
    return app;
  }
  return std::nullopt;
}

std::optional<TradeApplication> brute_force_trade(
    const GameRep& rep, int j, std::span<const Coalition> given,
    std::uint64_t budget, int cap) {
  TradeOracle oracle(rep, budget, cap);
  return oracle.find(j, given);
}

GameRep random_game(int n, std::uint64_t seed, double density) {
  if (n < 1 || n > 16) {
    throw precondition_error("random_game: n must be in [1, 16]");
  }
  if (!(density >= 0.0) || density > 16.0) {
    throw precondition_error("random_game: density out of range");
  }
  std::mt19937_64 rng(seed);
  const std::uint64_t nonempty = (std::uint64_t{1} << n) - 1;
  const int samples =
      std::max(1, static_cast<int>(std::lround(density * 2.0 * n)));
  std::vector<Coalition> sampled;
  sampled.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    // 1 + rng() % nonempty is never empty; uniformity is not needed, only
    // cross-platform determinism, which mt19937_64 guarantees.
    sampled.push_back(Coalition::from_mask(1 + rng() % nonempty));
  }
  return GameRep{n, RepKind::Wm, minimal_elements(std::move(sampled))};
}

GameRep chain_game(int j) {
  if (j < 1 || 2 * j > kMaxPlayers) {
    throw precondition_error("chain_game: j out of range");
  }
  GameRep rep{2 * j, RepKind::Wm, {}};
  for (int i = 0; i < j; ++i) {
    rep.coalitions.push_back(Coalition::of({2 * i, 2 * i + 1}));
  }
  return rep;
}

GameRep example_game() {
  return GameRep{4, RepKind::Wm, {Coalition::of({0, 2}), Coalition::of({1, 3})}};
}

}  // namespace sg
