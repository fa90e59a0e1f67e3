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

#include "hiergames/oracle.h"

#include <algorithm>
#include <set>

#include "hiergames/error.h"

namespace hiergames {
namespace {

constexpr int kMaxExpandedPlayers = 16;

// All subsets of `members` with exactly `size` elements.
void Choose(const std::vector<int>& members, int size, size_t from,
            PlayerSet chosen, std::vector<PlayerSet>& out) {
  if (size == 0) {
    out.push_back(chosen);
    return;
  }
  for (size_t i = from; i + static_cast<size_t>(size) <= members.size(); ++i) {
    Choose(members, size - 1, i + 1, chosen | (PlayerSet{1} << members[i]), out);
  }
}

class Repartitioner {
 public:
  Repartitioner(const PlayerMultiset& players,
                const std::function<bool(const Coalition&)>& losing)
      : players_(players), losing_(losing) {}

  bool Solve(const Coalition& pool, int parts, std::vector<Coalition>& out) {
    const int m = players_.levels();
    if (parts == 0) {
      return std::all_of(pool.counts().begin(), pool.counts().end(),
                         [](int c) { return c == 0; });
    }
    for (int i = 0; i < m; ++i) {
      if (pool[i] < 0 || pool[i] > parts * players_.size(i)) return false;
    }
    std::vector<int> key = pool.counts();
    key.push_back(parts);
    if (dead_.count(key)) return false;

    std::vector<int> low(static_cast<size_t>(m)), high(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
      low[static_cast<size_t>(i)] =
          std::max(0, pool[i] - (parts - 1) * players_.size(i));
      high[static_cast<size_t>(i)] = std::min(pool[i], players_.size(i));
    }
    Coalition part(low);
    while (true) {
      if (losing_(part)) {
        out.push_back(part);
        if (Solve(pool - part, parts - 1, out)) return true;
        out.pop_back();
      }
      int i = m - 1;
      while (i >= 0 && part[i] == high[static_cast<size_t>(i)]) {
        part[i] = low[static_cast<size_t>(i)];
        --i;
      }
      if (i < 0) break;
      ++part[i];
    }
    dead_.insert(std::move(key));
    return false;
  }

 private:
  const PlayerMultiset& players_;
  const std::function<bool(const Coalition&)>& losing_;
  std::set<std::vector<int>> dead_;
};

}  // namespace

ExpandedGame Expand(const MultisetGame& game) {
  const PlayerMultiset& players = game.players();
  if (players.total() > kMaxExpandedPlayers || players.total() < 1) {
    throw Error(ErrorCode::kCapacityExceeded,
                "expansion supports 1.." + std::to_string(kMaxExpandedPlayers) +
                    " players, game has " + std::to_string(players.total()));
  }
  std::vector<std::vector<int>> members(static_cast<size_t>(players.levels()));
  std::vector<int> level_of_player;
  for (int level = 0; level < players.levels(); ++level) {
    for (int t = 0; t < players.size(level); ++t) {
      members[static_cast<size_t>(level)].push_back(
          static_cast<int>(level_of_player.size()));
      level_of_player.push_back(level);
    }
  }
  std::vector<PlayerSet> sets;
  for (const Coalition& w : game.min_winning()) {
    std::vector<PlayerSet> partial{0};
    for (int level = 0; level < players.levels(); ++level) {
      std::vector<PlayerSet> picks;
      Choose(members[static_cast<size_t>(level)], w[level], 0, 0, picks);
      std::vector<PlayerSet> next;
      next.reserve(partial.size() * picks.size());
      for (PlayerSet a : partial) {
        for (PlayerSet b : picks) next.push_back(a | b);
      }
      partial = std::move(next);
    }
    sets.insert(sets.end(), partial.begin(), partial.end());
  }
  return ExpandedGame{SetGame(players.total(), std::move(sets)),
                      std::move(level_of_player)};
}

bool GamesEqual(const MultisetGame& a, const MultisetGame& b) {
  if (a.players() != b.players()) {
    throw Error(ErrorCode::kInvalidComparison,
                "games are defined on different player multisets");
  }
  return a.min_winning() == b.min_winning();
}

bool GamesEqual(const SetGame& a, const SetGame& b) {
  if (a.player_count() != b.player_count()) {
    throw Error(ErrorCode::kInvalidComparison,
                "games have different numbers of players");
  }
  return a.min_winning_sets() == b.min_winning_sets();
}

std::optional<std::vector<Coalition>> RepartitionExists(
    const PlayerMultiset& players, const Coalition& pool, int parts,
    const std::function<bool(const Coalition&)>& losing) {
  if (pool.levels() != players.levels()) {
    throw Error(ErrorCode::kInvalidCoalition, "pool has the wrong number of levels");
  }
  if (parts < 1) return std::nullopt;
  Repartitioner search(players, losing);
  std::vector<Coalition> out;
  if (!search.Solve(pool, parts, out)) return std::nullopt;
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hiergames
