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

#include "hiergames/hierarchy.h"

#include <sstream>

#include "hiergames/error.h"

namespace hiergames {
namespace {

std::string Join(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

bool PrefixRule(const HierarchyParams& p, const Coalition& c) {
  int prefix = 0;
  const bool any = p.kind == HierarchyKind::kDisjunctive;
  for (int i = 0; i < p.levels(); ++i) {
    prefix += c[i];
    const bool met = prefix >= p.k[static_cast<size_t>(i)];
    if (any && met) return true;
    if (!any && !met) return false;
  }
  return !any;
}

// Replaces levels i and i+1 by one level holding both and drops the
// threshold at index `dropped_threshold`.
void MergeLevels(HierarchyParams& p, size_t i, size_t dropped_threshold) {
  p.n[i] += p.n[i + 1];
  p.n.erase(p.n.begin() + static_cast<std::ptrdiff_t>(i + 1));
  p.k.erase(p.k.begin() + static_cast<std::ptrdiff_t>(dropped_threshold));
}

std::optional<HierarchyParams> ParamsFromMaximalLosing(const MultisetGame& game,
                                                       const Coalition& top) {
  const int m = game.levels();
  HierarchyParams p;
  p.kind = HierarchyKind::kDisjunctive;
  p.n = game.players().sizes();
  int prefix = 0;
  for (int i = 0; i < m; ++i) {
    prefix += top[i];
    p.k.push_back(prefix + 1);
  }
  if (m >= 2 && top[m - 1] == game.players().size(m - 1)) {
    p.k.back() = p.k[static_cast<size_t>(m - 2)] + p.n.back();
  }
  if (!IsCanonical(p)) return std::nullopt;
  return p;
}

}  // namespace

const char* HierarchyKindName(HierarchyKind kind) {
  return kind == HierarchyKind::kDisjunctive ? "disjunctive" : "conjunctive";
}

void HierarchyParams::Validate() const {
  if (n.empty()) {
    throw Error(ErrorCode::kInvalidParams, "a hierarchy needs at least one level");
  }
  if (n.size() != k.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "n has " + std::to_string(n.size()) + " entries, k has " +
                    std::to_string(k.size()));
  }
  for (int size : n) {
    if (size < 1) throw Error(ErrorCode::kInvalidParams, "level sizes must be positive");
  }
  for (int t : k) {
    if (t < 1) throw Error(ErrorCode::kInvalidParams, "thresholds must be positive");
  }
  const size_t m = k.size();
  for (size_t i = 1; i < m; ++i) {
    const bool last = i + 1 == m;
    const bool weak_ok = kind == HierarchyKind::kConjunctive && last;
    if (k[i] < k[i - 1] || (k[i] == k[i - 1] && !weak_ok)) {
      throw Error(ErrorCode::kInvalidParams,
                  std::string("thresholds of a ") + HierarchyKindName(kind) +
                      " hierarchy must increase: k = " + Join(k));
    }
  }
}

std::string HierarchyParams::ToString() const {
  return std::string(HierarchyKindName(kind)) + " n=(" + Join(n) + ") k=(" +
         Join(k) + ")";
}

MultisetGame Build(const HierarchyParams& p) {
  p.Validate();
  return MultisetGame::FromPredicate(
      PlayerMultiset(p.n), [&p](const Coalition& c) { return PrefixRule(p, c); });
}

MultisetGame BuildDisjunctive(const std::vector<int>& n, const std::vector<int>& k) {
  return Build(HierarchyParams{HierarchyKind::kDisjunctive, n, k});
}

MultisetGame BuildConjunctive(const std::vector<int>& n, const std::vector<int>& k) {
  return Build(HierarchyParams{HierarchyKind::kConjunctive, n, k});
}

bool IsCanonical(const HierarchyParams& p) {
  try {
    p.Validate();
  } catch (const Error&) {
    return false;
  }
  const auto& n = p.n;
  const auto& k = p.k;
  const size_t m = n.size();
  if (k[0] > n[0]) return false;
  if (p.kind == HierarchyKind::kDisjunctive) {
    for (size_t i = 1; i + 1 < m; ++i) {
      if (k[i] >= k[i - 1] + n[i]) return false;
    }
    return m == 1 || k[m - 1] <= k[m - 2] + n[m - 1];
  }
  for (size_t i = 1; i < m; ++i) {
    if (k[i] >= k[i - 1] + n[i]) return false;
  }
  return true;
}

HierarchyParams CanonicalParams(const HierarchyParams& p) {
  p.Validate();
  HierarchyParams q = p;
  if (q.kind == HierarchyKind::kDisjunctive) {
    bool changed = true;
    while (changed) {
      changed = false;
      if (q.n.size() >= 2 && q.k[0] > q.n[0]) {
        MergeLevels(q, 0, 0);
        changed = true;
        continue;
      }
      for (size_t i = 1; i + 1 < q.n.size(); ++i) {
        if (q.k[i] >= q.k[i - 1] + q.n[i]) {
          MergeLevels(q, i, i);
          changed = true;
          break;
        }
      }
    }
    const size_t m = q.n.size();
    if (m >= 2 && q.k[m - 1] > q.k[m - 2] + q.n[m - 1]) {
      q.k[m - 1] = q.k[m - 2] + q.n[m - 1];
    }
    return q;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 1; i < q.n.size(); ++i) {
      if (q.k[i] >= q.k[i - 1] + q.n[i]) {
        MergeLevels(q, i - 1, i - 1);
        changed = true;
        break;
      }
    }
  }
  return q;
}

HierarchyParams DualParams(const HierarchyParams& p) {
  p.Validate();
  HierarchyParams d;
  d.kind = p.kind == HierarchyKind::kDisjunctive ? HierarchyKind::kConjunctive
                                                  : HierarchyKind::kDisjunctive;
  d.n = p.n;
  int prefix = 0;
  for (size_t i = 0; i < p.n.size(); ++i) {
    prefix += p.n[i];
    const int dual_threshold = prefix - p.k[i] + 1;
    if (dual_threshold <= 0) {
      throw Error(ErrorCode::kInvalidParams,
                  "threshold k_" + std::to_string(i + 1) +
                      " exceeds the players available; canonicalize first");
    }
    d.k.push_back(dual_threshold);
  }
  try {
    d.Validate();
  } catch (const Error& e) {
    throw Error(ErrorCode::kInvalidParams,
                "dual of non-canonical parameters: " + std::string(e.what()));
  }
  return d;
}

bool HasDummyLevel(const HierarchyParams& p) {
  p.Validate();
  const size_t m = p.n.size();
  if (m < 2) return false;
  if (p.kind == HierarchyKind::kDisjunctive) {
    return p.k[m - 1] >= p.k[m - 2] + p.n[m - 1];
  }
  return p.k[m - 2] == p.k[m - 1];
}

std::optional<HierarchyParams> RecognizeDisjunctive(const MultisetGame& game) {
  const int m = game.levels();
  if (m == 0) return std::nullopt;
  for (int i = 0; i + 1 < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (IsbellCompare(game, i, j) != Desirability::kMore) return std::nullopt;
    }
  }
  const std::vector<Coalition> tops = ShiftMaximalLosing(game);
  if (tops.size() != 1) return std::nullopt;
  std::optional<HierarchyParams> p = ParamsFromMaximalLosing(game, tops.front());
  if (!p) return std::nullopt;
  if (Build(*p).min_winning() != game.min_winning()) return std::nullopt;
  return p;
}

std::optional<HierarchyParams> RecognizeConjunctive(const MultisetGame& game) {
  std::optional<MultisetGame> dual;
  try {
    dual = Dual(game);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kEmptyWinningSet) return std::nullopt;
    throw;
  }
  std::optional<HierarchyParams> disjunctive = RecognizeDisjunctive(*dual);
  if (!disjunctive) return std::nullopt;
  HierarchyParams p = DualParams(*disjunctive);
  if (p.levels() == 1) p.kind = HierarchyKind::kDisjunctive;
  return p;
}

}  // namespace hiergames
