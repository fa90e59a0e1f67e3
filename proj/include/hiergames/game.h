// Copyright 2026 The Hiergames Authors
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

#ifndef HIERGAMES_GAME_H_
#define HIERGAMES_GAME_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "hiergames/coalition.h"

namespace hiergames {

// A monotone simple game on a player multiset, held by its minimal winning
// coalitions. Immutable once built.
class MultisetGame {
 public:
  // Validates that every coalition fits the players, that the list is a
  // non-empty antichain, and stores it sorted lexicographically.
  MultisetGame(PlayerMultiset players, std::vector<Coalition> min_winning);

  // Keeps only the inclusion-minimal members of `winning`.
  static MultisetGame FromWinning(PlayerMultiset players,
                                  std::vector<Coalition> winning);

  // Enumerates the coalition space; `is_winning` must be monotone.
  static MultisetGame FromPredicate(
      PlayerMultiset players,
      const std::function<bool(const Coalition&)>& is_winning);

  const PlayerMultiset& players() const { return players_; }
  const std::vector<Coalition>& min_winning() const { return min_winning_; }
  int levels() const { return players_.levels(); }

  bool IsWinning(const Coalition& c) const;

  friend bool operator==(const MultisetGame&, const MultisetGame&) = default;

 private:
  PlayerMultiset players_;
  std::vector<Coalition> min_winning_;
};

// Bitmask of player indices 0..n-1.
using PlayerSet = std::uint64_t;

// A simple game on players 0..n-1, held by its minimal winning sets.
class SetGame {
 public:
  SetGame(int player_count, std::vector<PlayerSet> min_winning_sets);
  SetGame(int player_count, const std::vector<std::vector<int>>& min_winning);

  int player_count() const { return player_count_; }
  const std::vector<PlayerSet>& min_winning_sets() const { return min_winning_; }
  bool IsWinning(PlayerSet set) const;

  friend bool operator==(const SetGame&, const SetGame&) = default;

 private:
  int player_count_;
  std::vector<PlayerSet> min_winning_;
};

bool IsWinning(const MultisetGame& game, const Coalition& c);

// Losing coalitions all of whose one-player extensions win.
std::vector<Coalition> MaximalLosing(const MultisetGame& game);

// True when swapping players i and j never changes the outcome.
bool Interchangeable(const SetGame& game, int i, int j);

// Classes of the interchangeability relation, most desirable class first.
// Players inside a class are listed in increasing index order.
std::vector<std::vector<int>> EquivalenceClasses(const SetGame& game);

// Multiset game over EquivalenceClasses(game), in the same order.
MultisetGame CanonicalizeSetGame(const SetGame& game);

enum class Desirability { kMore, kEquivalent, kLess, kIncomparable };

const char* DesirabilityName(Desirability d);

// Isbell desirability between a player of level i and a player of level j.
Desirability IsbellCompare(const MultisetGame& game, int i, int j);

bool IsComplete(const MultisetGame& game);

// Moves one player of level i into level j (i < j, level i strictly more
// desirable). Throws kInvalidShift on any violated precondition.
Coalition ApplyShift(const MultisetGame& game, const Coalition& c, int i, int j);

// Both require a complete game whose levels are ordered from most to least
// desirable; they throw kNotComplete otherwise.
std::vector<Coalition> ShiftMinimalWinning(const MultisetGame& game);
std::vector<Coalition> ShiftMaximalLosing(const MultisetGame& game);

// Games on players - a. Levels emptied by `a` are dropped.
MultisetGame Subgame(const MultisetGame& game, const Coalition& a);
MultisetGame ReducedGame(const MultisetGame& game, const Coalition& a);

// c wins in the dual iff its complement loses in `game`.
MultisetGame Dual(const MultisetGame& game);

}  // namespace hiergames

#endif  // HIERGAMES_GAME_H_
