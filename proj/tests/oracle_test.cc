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

#include <functional>
#include <random>

#include "doctest.h"
#include "hiergames/error.h"
#include "hiergames/game.h"
#include "hiergames/hierarchy.h"
#include "hiergames/oracle.h"
#include "test_support.h"

namespace hiergames {
namespace {

using testing::AllCoalitions;
using testing::CanonicalGrid;

constexpr auto kDis = HierarchyKind::kDisjunctive;
constexpr auto kCon = HierarchyKind::kConjunctive;

Coalition C(std::vector<int> v) { return Coalition(std::move(v)); }

TEST_CASE("Expand") {
  const ExpandedGame e = Expand(BuildDisjunctive({2, 3}, {2, 3}));
  CHECK(e.game.player_count() == 5);
  CHECK(e.level_of_player == std::vector<int>{0, 0, 1, 1, 1});
  CHECK(e.game.IsWinning(0b00011));
  CHECK(e.game.IsWinning(0b11100));
  CHECK(e.game.IsWinning(0b01101));
  CHECK_FALSE(e.game.IsWinning(0b01001));
  for (PlayerSet s = 0; s < 32; ++s) {
    Coalition c = Coalition::Empty(2);
    for (int p = 0; p < 5; ++p) {
      if (s >> p & 1) ++c[e.level_of_player[static_cast<size_t>(p)]];
    }
    CHECK(e.game.IsWinning(s) == testing::DefinitionWins(kDis, {2, 3}, c));
  }
}

TEST_CASE("Expanding a weighted game keeps per-player weights") {
  const ExpandedGame e = Expand(BuildConjunctive({2, 4}, {2, 4}));
  for (PlayerSet s = 0; s < (PlayerSet{1} << 6); ++s) {
    int weight = 0;
    for (int p = 0; p < 6; ++p) {
      if (s >> p & 1) weight += e.level_of_player[static_cast<size_t>(p)] == 0 ? 3 : 1;
    }
    CHECK(e.game.IsWinning(s) == (weight >= 8));
  }
}

TEST_CASE("Expand and canonicalize round-trip") {
  for (auto kind : {kDis, kCon}) {
    for (const HierarchyParams& p : CanonicalGrid(kind, 4, 10)) {
      const MultisetGame g = Build(p);
      CHECK(CanonicalizeSetGame(Expand(g).game) == g);
    }
  }
  CHECK_THROWS_AS(Expand(BuildDisjunctive({9, 9}, {2, 3})), Error);
}

TEST_CASE("GamesEqual") {
  const HierarchyParams p{kDis, {3, 5}, {2, 4}};
  CHECK(GamesEqual(Build(p), Build(*RecognizeDisjunctive(Build(p)))));
  CHECK(GamesEqual(Build(p), Dual(Build(DualParams(p)))));
  CHECK_FALSE(GamesEqual(Build(p), BuildDisjunctive({3, 5}, {2, 5})));
  try {
    GamesEqual(Build(p), BuildDisjunctive({3, 4}, {2, 4}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidComparison);
  }
}

TEST_CASE("RepartitionExists examples") {
  const MultisetGame g = BuildDisjunctive({2, 4}, {2, 4});
  const auto losing = [&](const Coalition& c) { return !g.IsWinning(c); };
  const auto parts = RepartitionExists(g.players(), C({2, 4}), 2, losing);
  REQUIRE(parts.has_value());
  CHECK(*parts == std::vector<Coalition>{C({1, 2}), C({1, 2})});
  CHECK_FALSE(RepartitionExists(g.players(), C({2, 0}), 1, losing).has_value());
  CHECK_FALSE(RepartitionExists(g.players(), C({5, 0}), 2, losing).has_value());
}

// Every non-decreasing tuple of `parts` losing coalitions.
bool NaiveRepartition(const std::vector<Coalition>& losing, const Coalition& pool,
                      int parts, size_t from, Coalition sum) {
  if (parts == 0) return sum == pool;
  for (size_t i = from; i < losing.size(); ++i) {
    if (NaiveRepartition(losing, pool, parts - 1, i, sum + losing[i])) return true;
  }
  return false;
}

TEST_CASE("RepartitionExists is sound and complete on small games") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MultisetGame g = testing::RandomGame(rng, 3, 2);
    const std::vector<int> n = g.players().sizes();
    const auto lose = [&](const Coalition& c) { return !g.IsWinning(c); };
    std::vector<Coalition> losing;
    for (const Coalition& c : AllCoalitions(n)) {
      if (lose(c)) losing.push_back(c);
    }
    const int parts = std::uniform_int_distribution<int>(1, 3)(rng);
    Coalition pool = Coalition::Empty(g.levels());
    for (int i = 0; i < g.levels(); ++i) {
      pool[i] = std::uniform_int_distribution<int>(0, parts * n[static_cast<size_t>(i)])(rng);
    }
    const auto found = RepartitionExists(g.players(), pool, parts, lose);
    CHECK(found.has_value() ==
          NaiveRepartition(losing, pool, parts, 0, Coalition::Empty(g.levels())));
    if (found) {
      CHECK(static_cast<int>(found->size()) == parts);
      Coalition sum = Coalition::Empty(g.levels());
      for (const Coalition& c : *found) {
        CHECK(g.players().Admits(c));
        CHECK(lose(c));
        sum += c;
      }
      CHECK(sum == pool);
    }
  }
}

}  // namespace
}  // namespace hiergames
