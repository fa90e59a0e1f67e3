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

#include "hiergames/game.h"

#include <algorithm>
#include <bit>
#include <numeric>

#include "hiergames/error.h"

namespace hiergames {
namespace {

// Odometer over 0 <= x_i <= bounds[i] (bounds may contain zeros).
template <typename Fn>
void ForEachBounded(const std::vector<int>& bounds, Fn&& fn) {
  Coalition c = Coalition::Empty(static_cast<int>(bounds.size()));
  const int m = static_cast<int>(bounds.size());
  while (true) {
    fn(static_cast<const Coalition&>(c));
    int i = m - 1;
    while (i >= 0 && c[i] == bounds[static_cast<size_t>(i)]) {
      c[i] = 0;
      --i;
    }
    if (i < 0) return;
    ++c[i];
  }
}

std::vector<Coalition> MinimalOnly(std::vector<Coalition> coalitions) {
  std::sort(coalitions.begin(), coalitions.end());
  coalitions.erase(std::unique(coalitions.begin(), coalitions.end()),
                   coalitions.end());
  std::vector<Coalition> result;
  for (const Coalition& c : coalitions) {
    const bool dominated =
        std::any_of(coalitions.begin(), coalitions.end(),
                    [&](const Coalition& d) { return d != c && d.IsSubsetOf(c); });
    if (!dominated) result.push_back(c);
  }
  return result;
}

Coalition Project(const Coalition& c, const std::vector<int>& kept) {
  std::vector<int> counts;
  counts.reserve(kept.size());
  for (int level : kept) counts.push_back(c[level]);
  return Coalition(std::move(counts));
}

struct Remainder {
  PlayerMultiset players;
  std::vector<int> kept;
};

Remainder RemainingPlayers(const MultisetGame& game, const Coalition& a) {
  game.players().Validate(a);
  Remainder r;
  std::vector<int> sizes;
  for (int i = 0; i < game.levels(); ++i) {
    const int left = game.players().size(i) - a[i];
    if (left > 0) {
      sizes.push_back(left);
      r.kept.push_back(i);
    }
  }
  r.players = PlayerMultiset(std::move(sizes));
  return r;
}

// Comparison matrix; throws unless every pair i < j has i at least as
// desirable as j.
std::vector<std::vector<Desirability>> OrderedComparisons(
    const MultisetGame& game) {
  const int m = game.levels();
  std::vector<std::vector<Desirability>> cmp(
      static_cast<size_t>(m),
      std::vector<Desirability>(static_cast<size_t>(m), Desirability::kEquivalent));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Desirability d = IsbellCompare(game, i, j);
      if (d != Desirability::kMore && d != Desirability::kEquivalent) {
        throw Error(ErrorCode::kNotComplete,
                    "levels " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) +
                        " are not in decreasing desirability order");
      }
      cmp[static_cast<size_t>(i)][static_cast<size_t>(j)] = d;
    }
  }
  return cmp;
}

bool StrictlyAbove(const std::vector<std::vector<Desirability>>& cmp, int i,
                   int j) {
  return cmp[static_cast<size_t>(i)][static_cast<size_t>(j)] == Desirability::kMore;
}

PlayerSet Bit(int player) { return PlayerSet{1} << player; }

void CheckSetCapacity(int player_count) {
  if (player_count > 62 ||
      (std::uint64_t{1} << player_count) > EnumerationLimit()) {
    throw Error(ErrorCode::kCapacityExceeded,
                "set game with " + std::to_string(player_count) +
                    " players exceeds the enumeration limit");
  }
}

// Calls fn for every subset of `universe`, including the empty set.
template <typename Fn>
void ForEachSubset(PlayerSet universe, Fn&& fn) {
  PlayerSet x = universe;
  while (true) {
    fn(x);
    if (x == 0) return;
    x = (x - 1) & universe;
  }
}

}  // namespace

MultisetGame::MultisetGame(PlayerMultiset players,
                           std::vector<Coalition> min_winning)
    : players_(std::move(players)), min_winning_(std::move(min_winning)) {
  if (min_winning_.empty()) {
    throw Error(ErrorCode::kEmptyWinningSet, "a game needs a winning coalition");
  }
  for (const Coalition& c : min_winning_) players_.Validate(c);
  std::sort(min_winning_.begin(), min_winning_.end());
  for (size_t a = 0; a < min_winning_.size(); ++a) {
    for (size_t b = 0; b < min_winning_.size(); ++b) {
      if (a != b && min_winning_[a].IsSubsetOf(min_winning_[b])) {
        throw Error(ErrorCode::kInvalidGame,
                    "minimal winning coalitions " + min_winning_[a].ToString() +
                        " and " + min_winning_[b].ToString() +
                        " are not an antichain");
      }
    }
  }
}

MultisetGame MultisetGame::FromWinning(PlayerMultiset players,
                                       std::vector<Coalition> winning) {
  for (const Coalition& c : winning) players.Validate(c);
  return MultisetGame(std::move(players), MinimalOnly(std::move(winning)));
}

MultisetGame MultisetGame::FromPredicate(
    PlayerMultiset players,
    const std::function<bool(const Coalition&)>& is_winning) {
  CheckEnumerable(players);
  const int m = players.levels();
  std::vector<std::size_t> stride(static_cast<size_t>(m), 1);
  for (int i = m - 2; i >= 0; --i) {
    stride[static_cast<size_t>(i)] =
        stride[static_cast<size_t>(i + 1)] *
        static_cast<std::size_t>(players.size(i + 1) + 1);
  }
  std::vector<char> wins(static_cast<size_t>(players.CoalitionCount()), 0);
  std::vector<Coalition> minimal;
  std::size_t index = 0;
  ForEachCoalition(players, [&](const Coalition& c) {
    const bool w = is_winning(c);
    wins[index] = w ? 1 : 0;
    bool is_minimal = w;
    for (int i = 0; i < m; ++i) {
      if (c[i] == 0) continue;
      const bool below = wins[index - stride[static_cast<size_t>(i)]] != 0;
      if (below && !w) {
        throw Error(ErrorCode::kInvalidGame,
                    "winning predicate is not monotone at " + c.ToString());
      }
      if (below) is_minimal = false;
    }
    if (is_minimal) minimal.push_back(c);
    ++index;
  });
  return MultisetGame(std::move(players), std::move(minimal));
}

bool MultisetGame::IsWinning(const Coalition& c) const {
  players_.Validate(c);
  return std::any_of(min_winning_.begin(), min_winning_.end(),
                     [&](const Coalition& w) { return w.IsSubsetOf(c); });
}

SetGame::SetGame(int player_count, std::vector<PlayerSet> min_winning_sets)
    : player_count_(player_count), min_winning_(std::move(min_winning_sets)) {
  if (player_count_ < 1 || player_count_ > 63) {
    throw Error(ErrorCode::kInvalidGame, "set game needs 1..63 players");
  }
  if (min_winning_.empty()) {
    throw Error(ErrorCode::kEmptyWinningSet, "a game needs a winning coalition");
  }
  const PlayerSet all = (PlayerSet{1} << player_count_) - 1;
  std::sort(min_winning_.begin(), min_winning_.end());
  min_winning_.erase(std::unique(min_winning_.begin(), min_winning_.end()),
                     min_winning_.end());
  for (PlayerSet a : min_winning_) {
    if ((a & ~all) != 0) {
      throw Error(ErrorCode::kInvalidCoalition, "player index out of range");
    }
    for (PlayerSet b : min_winning_) {
      if (a != b && (a & ~b) == 0) {
        throw Error(ErrorCode::kInvalidGame,
                    "minimal winning sets are not an antichain");
      }
    }
  }
}

namespace {

std::vector<PlayerSet> ToMasks(int player_count,
                               const std::vector<std::vector<int>>& sets) {
  std::vector<PlayerSet> masks;
  for (const auto& set : sets) {
    PlayerSet mask = 0;
    for (int p : set) {
      if (p < 0 || p >= player_count) {
        throw Error(ErrorCode::kInvalidCoalition, "player index out of range");
      }
      mask |= Bit(p);
    }
    masks.push_back(mask);
  }
  return masks;
}

}  // namespace

SetGame::SetGame(int player_count, const std::vector<std::vector<int>>& min_winning)
    : SetGame(player_count, ToMasks(player_count, min_winning)) {}

bool SetGame::IsWinning(PlayerSet set) const {
  return std::any_of(min_winning_.begin(), min_winning_.end(),
                     [set](PlayerSet w) { return (w & ~set) == 0; });
}

bool IsWinning(const MultisetGame& game, const Coalition& c) {
  return game.IsWinning(c);
}

std::vector<Coalition> MaximalLosing(const MultisetGame& game) {
  const PlayerMultiset& players = game.players();
  std::vector<Coalition> result;
  ForEachCoalition(players, [&](const Coalition& c) {
    if (game.IsWinning(c)) return;
    Coalition up = c;
    for (int i = 0; i < players.levels(); ++i) {
      if (c[i] == players.size(i)) continue;
      ++up[i];
      const bool wins = game.IsWinning(up);
      --up[i];
      if (!wins) return;
    }
    result.push_back(c);
  });
  return result;
}

bool Interchangeable(const SetGame& game, int i, int j) {
  const int n = game.player_count();
  if (i < 0 || j < 0 || i >= n || j >= n) {
    throw Error(ErrorCode::kInvalidCoalition, "player index out of range");
  }
  if (i == j) return true;
  CheckSetCapacity(n);
  const PlayerSet all = (PlayerSet{1} << n) - 1;
  const PlayerSet others = all & ~(Bit(i) | Bit(j));
  bool same = true;
  ForEachSubset(others, [&](PlayerSet x) {
    if (same && game.IsWinning(x | Bit(i)) != game.IsWinning(x | Bit(j))) {
      same = false;
    }
  });
  return same;
}

std::vector<std::vector<int>> EquivalenceClasses(const SetGame& game) {
  const int n = game.player_count();
  CheckSetCapacity(n);
  std::vector<int> class_of(static_cast<size_t>(n), -1);
  std::vector<std::vector<int>> classes;
  for (int p = 0; p < n; ++p) {
    if (class_of[static_cast<size_t>(p)] >= 0) continue;
    const int id = static_cast<int>(classes.size());
    classes.push_back({p});
    class_of[static_cast<size_t>(p)] = id;
    for (int q = p + 1; q < n; ++q) {
      if (class_of[static_cast<size_t>(q)] < 0 && Interchangeable(game, p, q)) {
        class_of[static_cast<size_t>(q)] = id;
        classes.back().push_back(q);
      }
    }
  }

  // Number of coalitions a player turns winning; strictly larger for a
  // strictly more desirable player, so sorting by it extends the order.
  const PlayerSet all = (PlayerSet{1} << n) - 1;
  std::vector<std::uint64_t> swing(classes.size(), 0);
  for (size_t c = 0; c < classes.size(); ++c) {
    const int rep = classes[c].front();
    ForEachSubset(all & ~Bit(rep), [&](PlayerSet x) {
      if (game.IsWinning(x | Bit(rep))) ++swing[c];
    });
  }
  std::vector<size_t> order(classes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return swing[a] > swing[b];
  });
  std::vector<std::vector<int>> sorted;
  sorted.reserve(classes.size());
  for (size_t c : order) sorted.push_back(std::move(classes[c]));
  return sorted;
}

MultisetGame CanonicalizeSetGame(const SetGame& game) {
  const std::vector<std::vector<int>> classes = EquivalenceClasses(game);
  std::vector<int> sizes;
  for (const auto& c : classes) sizes.push_back(static_cast<int>(c.size()));
  return MultisetGame::FromPredicate(
      PlayerMultiset(std::move(sizes)), [&](const Coalition& c) {
        PlayerSet set = 0;
        for (size_t level = 0; level < classes.size(); ++level) {
          for (int t = 0; t < c[static_cast<int>(level)]; ++t) {
            set |= Bit(classes[level][static_cast<size_t>(t)]);
          }
        }
        return game.IsWinning(set);
      });
}

const char* DesirabilityName(Desirability d) {
  switch (d) {
    case Desirability::kMore: return "more";
    case Desirability::kEquivalent: return "equivalent";
    case Desirability::kLess: return "less";
    case Desirability::kIncomparable: return "incomparable";
  }
  return "unknown";
}

Desirability IsbellCompare(const MultisetGame& game, int i, int j) {
  const int m = game.levels();
  if (i < 0 || j < 0 || i >= m || j >= m) {
    throw Error(ErrorCode::kInvalidCoalition, "level index out of range");
  }
  if (i == j) return Desirability::kEquivalent;
  CheckEnumerable(game.players());
  std::vector<int> bounds = game.players().sizes();
  --bounds[static_cast<size_t>(i)];
  --bounds[static_cast<size_t>(j)];
  bool i_over_j = true;
  bool j_over_i = true;
  ForEachBounded(bounds, [&](const Coalition& x) {
    Coalition with_i = x;
    ++with_i[i];
    Coalition with_j = x;
    ++with_j[j];
    const bool wi = game.IsWinning(with_i);
    const bool wj = game.IsWinning(with_j);
    if (wj && !wi) i_over_j = false;
    if (wi && !wj) j_over_i = false;
  });
  if (i_over_j && j_over_i) return Desirability::kEquivalent;
  if (i_over_j) return Desirability::kMore;
  if (j_over_i) return Desirability::kLess;
  return Desirability::kIncomparable;
}

bool IsComplete(const MultisetGame& game) {
  for (int i = 0; i < game.levels(); ++i) {
    for (int j = i + 1; j < game.levels(); ++j) {
      if (IsbellCompare(game, i, j) == Desirability::kIncomparable) return false;
    }
  }
  return true;
}

Coalition ApplyShift(const MultisetGame& game, const Coalition& c, int i, int j) {
  game.players().Validate(c);
  const int m = game.levels();
  if (i < 0 || j < 0 || i >= m || j >= m || i >= j) {
    throw Error(ErrorCode::kInvalidShift,
                "a shift moves a player to a strictly later level");
  }
  if (c[i] < 1) {
    throw Error(ErrorCode::kInvalidShift,
                "coalition " + c.ToString() + " has no player on level " +
                    std::to_string(i + 1));
  }
  if (c[j] >= game.players().size(j)) {
    throw Error(ErrorCode::kInvalidShift,
                "level " + std::to_string(j + 1) + " of " + c.ToString() +
                    " is at capacity");
  }
  if (IsbellCompare(game, i, j) != Desirability::kMore) {
    throw Error(ErrorCode::kInvalidShift,
                "level " + std::to_string(i + 1) +
                    " is not strictly more desirable than level " +
                    std::to_string(j + 1));
  }
  Coalition shifted = c;
  --shifted[i];
  ++shifted[j];
  return shifted;
}

std::vector<Coalition> ShiftMinimalWinning(const MultisetGame& game) {
  const auto cmp = OrderedComparisons(game);
  const PlayerMultiset& players = game.players();
  const int m = game.levels();
  std::vector<Coalition> result;
  for (const Coalition& w : game.min_winning()) {
    bool shift_minimal = true;
    for (int i = 0; i < m && shift_minimal; ++i) {
      if (w[i] == 0) continue;
      for (int j = i + 1; j < m && shift_minimal; ++j) {
        if (!StrictlyAbove(cmp, i, j) || w[j] == players.size(j)) continue;
        Coalition shifted = w;
        --shifted[i];
        ++shifted[j];
        if (game.IsWinning(shifted)) shift_minimal = false;
      }
    }
    if (shift_minimal) result.push_back(w);
  }
  return result;
}

std::vector<Coalition> ShiftMaximalLosing(const MultisetGame& game) {
  const auto cmp = OrderedComparisons(game);
  const PlayerMultiset& players = game.players();
  const int m = game.levels();
  std::vector<Coalition> result;
  for (const Coalition& y : MaximalLosing(game)) {
    // y must not arise by a shift from another losing coalition.
    bool shift_maximal = true;
    for (int i = 0; i < m && shift_maximal; ++i) {
      if (y[i] == players.size(i)) continue;
      for (int j = i + 1; j < m && shift_maximal; ++j) {
        if (!StrictlyAbove(cmp, i, j) || y[j] == 0) continue;
        Coalition source = y;
        ++source[i];
        --source[j];
        if (!game.IsWinning(source)) shift_maximal = false;
      }
    }
    if (shift_maximal) result.push_back(y);
  }
  return result;
}

MultisetGame Subgame(const MultisetGame& game, const Coalition& a) {
  Remainder rest = RemainingPlayers(game, a);
  const Coalition room = game.players().Full() - a;
  std::vector<Coalition> kept;
  for (const Coalition& w : game.min_winning()) {
    if (w.IsSubsetOf(room)) kept.push_back(Project(w, rest.kept));
  }
  if (kept.empty()) {
    throw Error(ErrorCode::kEmptyWinningSet,
                "subgame without " + a.ToString() + " has no winning coalition");
  }
  return MultisetGame(std::move(rest.players), std::move(kept));
}

MultisetGame ReducedGame(const MultisetGame& game, const Coalition& a) {
  Remainder rest = RemainingPlayers(game, a);
  std::vector<Coalition> needed;
  for (const Coalition& w : game.min_winning()) {
    Coalition d = w;
    for (int i = 0; i < d.levels(); ++i) d[i] = std::max(0, w[i] - a[i]);
    needed.push_back(Project(d, rest.kept));
  }
  return MultisetGame::FromWinning(std::move(rest.players), std::move(needed));
}

MultisetGame Dual(const MultisetGame& game) {
  const Coalition full = game.players().Full();
  return MultisetGame::FromPredicate(game.players(), [&](const Coalition& c) {
    return !game.IsWinning(full - c);
  });
}

}  // namespace hiergames
