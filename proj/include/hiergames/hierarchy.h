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

#ifndef HIERGAMES_HIERARCHY_H_
#define HIERGAMES_HIERARCHY_H_

#include <optional>
#include <string>
#include <vector>

#include "hiergames/game.h"

namespace hiergames {

enum class HierarchyKind { kDisjunctive, kConjunctive };

const char* HierarchyKindName(HierarchyKind kind);

// Level sizes n and prefix thresholds k of a hierarchical game.
//   disjunctive: c wins iff some prefix sum c_1 + ... + c_i reaches k_i;
//                k strictly increasing.
//   conjunctive: c wins iff every prefix sum reaches its k_i;
//                k_1 < ... < k_{m-1} <= k_m.
struct HierarchyParams {
  HierarchyKind kind = HierarchyKind::kDisjunctive;
  std::vector<int> n;
  std::vector<int> k;

  int levels() const { return static_cast<int>(n.size()); }

  // Throws kInvalidParams when the invariants above are violated.
  void Validate() const;

  std::string ToString() const;

  friend bool operator==(const HierarchyParams&, const HierarchyParams&) = default;
};

MultisetGame BuildDisjunctive(const std::vector<int>& n, const std::vector<int>& k);
MultisetGame BuildConjunctive(const std::vector<int>& n, const std::vector<int>& k);
MultisetGame Build(const HierarchyParams& p);

// True when every level is its own equivalence class, and a dummy last level
// of a disjunctive game stores k_m = k_{m-1} + n_m exactly.
bool IsCanonical(const HierarchyParams& p);

// Merges levels that are interchangeable until the parameters are canonical.
// The result builds the same game on the coarsened player multiset.
HierarchyParams CanonicalParams(const HierarchyParams& p);

// Opposite kind, same n, k*_i = n_1 + ... + n_i - k_i + 1.
HierarchyParams DualParams(const HierarchyParams& p);

bool HasDummyLevel(const HierarchyParams& p);

// Canonical disjunctive parameters when the game is complete, has its levels
// strictly ordered by desirability and a unique shift-maximal losing coalition.
std::optional<HierarchyParams> RecognizeDisjunctive(const MultisetGame& game);

// Canonical conjunctive parameters via the dual game. One-level games are
// reported as disjunctive.
std::optional<HierarchyParams> RecognizeConjunctive(const MultisetGame& game);

}  // namespace hiergames

#endif  // HIERGAMES_HIERARCHY_H_
