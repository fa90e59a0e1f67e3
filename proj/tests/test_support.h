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

// Brute-force helpers shared by the test binaries. Nothing here calls into
// the enumeration or minimization code of the library, so these can serve as
// independent references.

#ifndef HIERGAMES_TESTS_TEST_SUPPORT_H_
#define HIERGAMES_TESTS_TEST_SUPPORT_H_

#include <functional>
#include <random>
#include <vector>

#include "hiergames/coalition.h"
#include "hiergames/game.h"
#include "hiergames/hierarchy.h"

namespace hiergames::testing {

inline void Collect(const std::vector<int>& n, size_t level, std::vector<int>& cur,
                    std::vector<Coalition>& out) {
  if (level == n.size()) {
    out.emplace_back(cur);
    return;
  }
  for (int c = 0; c <= n[level]; ++c) {
    cur.push_back(c);
    Collect(n, level + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Coalition> AllCoalitions(const std::vector<int>& n) {
  std::vector<Coalition> out;
  std::vector<int> cur;
  Collect(n, 0, cur, out);
  return out;
}

// Straight from the threshold definitions.
inline bool DefinitionWins(HierarchyKind kind, const std::vector<int>& k,
                           const Coalition& c) {
  int prefix = 0;
  bool any = false;
  bool all = true;
  for (size_t i = 0; i < k.size(); ++i) {
    prefix += c[static_cast<int>(i)];
    if (prefix >= k[i]) {
      any = true;
    } else {
      all = false;
    }
  }
  return kind == HierarchyKind::kDisjunctive ? any : all;
}

inline bool ProperSubset(const Coalition& a, const Coalition& b) {
  return a != b && a.IsSubsetOf(b);
}

// Winning coalitions with no winning proper submultiset, sorted.
inline std::vector<Coalition> BruteMinimalWinning(
    const std::vector<int>& n, const std::function<bool(const Coalition&)>& wins) {
  const std::vector<Coalition> all = AllCoalitions(n);
  std::vector<Coalition> out;
  for (const Coalition& c : all) {
    if (!wins(c)) continue;
    bool minimal = true;
    for (const Coalition& d : all) {
      if (ProperSubset(d, c) && wins(d)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

inline std::vector<Coalition> BruteMaximalLosing(
    const std::vector<int>& n, const std::function<bool(const Coalition&)>& wins) {
  const std::vector<Coalition> all = AllCoalitions(n);
  std::vector<Coalition> out;
  for (const Coalition& c : all) {
    if (wins(c)) continue;
    bool maximal = true;
    for (const Coalition& d : all) {
      if (ProperSubset(c, d) && !wins(d)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(c);
  }
  return out;
}

inline std::function<bool(const Coalition&)> Predicate(const MultisetGame& g) {
  return [&g](const Coalition& c) { return g.IsWinning(c); };
}

// Canonical parameter sets enumerated directly from the level conditions:
// k_1 <= n_1, interior k_i < k_{i-1} + n_i, and for the last level either the
// same bound (conjunctive: k_{m-1} <= k_m) or, for disjunctive games,
// k_m <= k_{m-1} + n_m with equality meaning a dummy level.
inline void GridThresholds(HierarchyKind kind, const std::vector<int>& n,
                           std::vector<int>& k, std::vector<HierarchyParams>& out) {
  const size_t i = k.size();
  const size_t m = n.size();
  if (i == m) {
    out.push_back(HierarchyParams{kind, n, k});
    return;
  }
  int lo = 1;
  int hi = n[0];
  if (i > 0) {
    const bool last = i + 1 == m;
    lo = k[i - 1] + 1;
    hi = k[i - 1] + n[i] - 1;
    if (last && kind == HierarchyKind::kDisjunctive) hi = k[i - 1] + n[i];
    if (last && kind == HierarchyKind::kConjunctive) lo = k[i - 1];
  }
  for (int t = lo; t <= hi; ++t) {
    k.push_back(t);
    GridThresholds(kind, n, k, out);
    k.pop_back();
  }
}

inline void GridSizes(HierarchyKind kind, int levels, int budget, std::vector<int>& n,
                      std::vector<HierarchyParams>& out) {
  if (static_cast<int>(n.size()) == levels) {
    std::vector<int> k;
    GridThresholds(kind, n, k, out);
    return;
  }
  for (int size = 1; size <= budget - (levels - static_cast<int>(n.size()) - 1); ++size) {
    n.push_back(size);
    GridSizes(kind, levels, budget - size, n, out);
    n.pop_back();
  }
}

// Every canonical parameter set with at most `max_levels` levels and at most
// `max_players` players in total.
inline std::vector<HierarchyParams> CanonicalGrid(HierarchyKind kind, int max_levels,
                                                  int max_players) {
  std::vector<HierarchyParams> out;
  for (int m = 1; m <= max_levels; ++m) {
    std::vector<int> n;
    GridSizes(kind, m, max_players, n, out);
  }
  return out;
}

// A random monotone game on at most `max_levels` levels of at most
// `max_size` players each.
inline MultisetGame RandomGame(std::mt19937& rng, int max_levels, int max_size) {
  std::uniform_int_distribution<int> levels(1, max_levels);
  std::uniform_int_distribution<int> size(1, max_size);
  std::vector<int> n(static_cast<size_t>(levels(rng)));
  for (int& s : n) s = size(rng);
  const std::vector<Coalition> all = AllCoalitions(n);
  std::uniform_int_distribution<size_t> pick(1, all.size() - 1);
  std::uniform_int_distribution<int> count(1, 4);
  std::vector<Coalition> generators;
  const int g = count(rng);
  for (int t = 0; t < g; ++t) generators.push_back(all[pick(rng)]);
  return MultisetGame::FromWinning(PlayerMultiset(n), generators);
}

}  // namespace hiergames::testing

#endif  // HIERGAMES_TESTS_TEST_SUPPORT_H_
