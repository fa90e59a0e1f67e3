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

#ifndef HIERGAMES_ORACLE_H_
#define HIERGAMES_ORACLE_H_

#include <functional>
#include <optional>
#include <vector>

#include "hiergames/game.h"

namespace hiergames {

// A multiset game unfolded onto individual players. Players of level 0 come
// first, then level 1, and so on.
struct ExpandedGame {
  SetGame game;
  std::vector<int> level_of_player;
};

// Requires at most 16 players in total (kCapacityExceeded otherwise).
ExpandedGame Expand(const MultisetGame& game);

// Same winning coalitions. Throws kInvalidComparison when the player
// multisets differ.
bool GamesEqual(const MultisetGame& a, const MultisetGame& b);
bool GamesEqual(const SetGame& a, const SetGame& b);

// Splits `pool` into `parts` coalitions that each fit in `players` and
// satisfy `losing`. Depth-first with memoized dead ends on
// (remaining pool, remaining parts). The result is sorted.
std::optional<std::vector<Coalition>> RepartitionExists(
    const PlayerMultiset& players, const Coalition& pool, int parts,
    const std::function<bool(const Coalition&)>& losing);

}  // namespace hiergames

#endif  // HIERGAMES_ORACLE_H_
