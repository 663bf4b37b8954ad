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

#ifndef SG_CORE_HPP_
#define SG_CORE_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sg {

// Players are 0-based indices in [0, n). File formats and all public
// interfaces use the same 0-based ids.
using Player = int;

// Hard cap on the player universe: coalitions are 64-bit membership masks.
inline constexpr int kMaxPlayers = 64;

// Largest n for which exhaustive 2^n enumeration is attempted by default.
inline constexpr int kDefaultOracleCap = 20;

// Default unit budget for the multiset enumeration in decide_j_trade.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

// Default transition budget for the exhaustive trade search.
inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or JSON document.
class parse_error : public error {
 public:
  explicit parse_error(const std::string& what) : error(what) {}
};

// A coalition refers to a player id outside [0, n).
class invalid_coalition_error : public error {
 public:
  explicit invalid_coalition_error(const std::string& what) : error(what) {}
};

// An operation was called outside its stated preconditions.
class precondition_error : public error {
 public:
  explicit precondition_error(const std::string& what) : error(what) {}
};

// A search exceeded its enumeration budget or size cap. Distinct from a
// negative decision: callers must not conflate resource exhaustion with "no".
class budget_error : public error {
 public:
  explicit budget_error(const std::string& what) : error(what) {}
};

/// A subset of the player universe, stored as a bit-membership mask.
/// Equality is set equality; iteration order is ascending player id.
class Coalition {
 public:
  constexpr Coalition() = default;

  static constexpr Coalition from_mask(std::uint64_t mask) {
    Coalition c;
    c.mask_ = mask;
    return c;
  }

  static Coalition of(std::initializer_list<Player> players) {
    Coalition c;
    for (Player p : players) c = c.with(p);
    return c;
  }

  static Coalition full(int n) {
    return from_mask(n >= kMaxPlayers ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }

  constexpr bool contains(Player p) const {
    return (mask_ >> p) & std::uint64_t{1};
  }
  constexpr bool subset_of(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }

  constexpr Coalition with(Player p) const {
    return from_mask(mask_ | (std::uint64_t{1} << p));
  }
  constexpr Coalition without(Player p) const {
    return from_mask(mask_ & ~(std::uint64_t{1} << p));
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return from_mask(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return from_mask(a.mask_ & b.mask_);
  }
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return from_mask(a.mask_ & ~b.mask_);
  }

  std::vector<Player> members() const;

  friend constexpr bool operator==(Coalition a, Coalition b) = default;
  friend constexpr auto operator<=>(Coalition a, Coalition b) {
    return a.mask_ <=> b.mask_;
  }

 private:
  std::uint64_t mask_ = 0;
};

std::string to_string(Coalition c);

enum class RepKind { W, L, Wm, LM };

std::string to_string(RepKind kind);

enum class Classification { Winning, Losing };

/// A simple game given as a tagged coalition list over players {0,..,n-1}.
///
/// W and L are complete explicit listings of the winning (losing)
/// coalitions; Wm and LM are the antichains of minimal winning (maximal
/// losing) coalitions.
struct GameRep {
  int n = 0;
  RepKind kind = RepKind::Wm;
  std::vector<Coalition> coalitions;

  Coalition grand_coalition() const { return Coalition::full(n); }
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
};

/// Classifies s as Winning or Losing under rep.
///
/// W: winning iff listed. L: losing iff listed. Wm: winning iff some listed
/// coalition is a subset of s. LM: losing iff s is a subset of some listed
/// coalition. Throws invalid_coalition_error if s has a player id >= n.
Classification classify(const GameRep& rep, Coalition s);

/// Checks the representation invariants and reports every violation found:
/// duplicates, out-of-range players, non-antichain lists for Wm/LM, the
/// empty coalition winning, the grand coalition losing, and (for explicit
/// W/L lists with n <= oracle_cap) monotonicity of the implied game.
ValidationReport validate_game(const GameRep& rep,
                               int oracle_cap = kDefaultOracleCap);

/// Number of coalitions in the list that contain p.
int multiplicity(std::span<const Coalition> coalitions, Player p);

/// Per-player occurrence counts over a list of coalitions, stored as
/// threshold masks: level k holds the players occurring more than k times.
class PlayerCounts {
 public:
  PlayerCounts() = default;

  static PlayerCounts of(std::span<const Coalition> coalitions) {
    PlayerCounts pc;
    for (Coalition c : coalitions) pc.add(c);
    return pc;
  }

  void add(Coalition c) {
    std::uint64_t carry = c.mask();
    for (std::size_t k = 0; carry != 0; ++k) {
      if (k == levels_.size()) levels_.push_back(0);
      const std::uint64_t next = levels_[k] & carry;
      levels_[k] |= carry;
      carry = next;
    }
  }

  int count(Player p) const {
    int c = 0;
    for (std::uint64_t level : levels_) c += (level >> p) & 1;
    return c;
  }

  // True when this count vector is pointwise <= other's.
  bool leq(const PlayerCounts& other) const {
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      const std::uint64_t rhs = k < other.levels_.size() ? other.levels_[k] : 0;
      if ((levels_[k] & ~rhs) != 0) return false;
    }
    return true;
  }

  friend bool operator==(const PlayerCounts& a, const PlayerCounts& b) {
    const std::size_t levels = std::max(a.levels_.size(), b.levels_.size());
    for (std::size_t k = 0; k < levels; ++k) {
      const std::uint64_t lhs = k < a.levels_.size() ? a.levels_[k] : 0;
      const std::uint64_t rhs = k < b.levels_.size() ? b.levels_[k] : 0;
      if (lhs != rhs) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> levels_;
};

}  // namespace sg

#endif  // SG_CORE_HPP_
