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

#include "hiergames/weighted.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "hiergames/error.h"
#include "hiergames/oracle.h"

namespace hiergames {
namespace {

using Levels = std::vector<int>;

Levels Slice(const Levels& v, size_t from, size_t to) {
  return Levels(v.begin() + static_cast<std::ptrdiff_t>(from),
                v.begin() + static_cast<std::ptrdiff_t>(to));
}

bool TwoLevelSpecial(int n2, int k1, int k2) {
  return k2 == k1 + 1 || n2 == k2 - k1 + 1;
}

// Thresholds are 0-based here: k[0] is k_1.
int DisjunctiveRule(const Levels& n, const Levels& k) {
  const size_t m = n.size();
  if (m == 1) return 1;
  if (m == 2 && k[1] == k[0] + 1) return 2;
  if (m == 2 && n[1] == k[1] - k[0] + 1) return 3;
  if (k[0] == 1) {
    if (m == 2) return 4;
    if (m == 3 && TwoLevelSpecial(n[2], k[1], k[2])) return 4;
  }
  if (m >= 2 && m <= 4 && k[m - 1] >= k[m - 2] + n[m - 1] &&
      DisjunctiveRule(Slice(n, 0, m - 1), Slice(k, 0, m - 1)) != 0) {
    return 5;
  }
  return 0;
}

int ConjunctiveRule(const Levels& n, const Levels& k) {
  const size_t m = n.size();
  if (m == 1) return 1;
  if (m == 2 && k[1] == k[0] + 1) return 2;
  if (m == 2 && n[1] == k[1] - k[0] + 1) return 3;
  if (k[0] == n[0]) {
    if (m == 2) return 4;
    // Reduced game on levels 2, 3 with thresholds k_2 - k_1, k_3 - k_1.
    if (m == 3 && TwoLevelSpecial(n[2], k[1] - k[0], k[2] - k[0])) return 4;
  }
  if (m >= 2 && m <= 4 && k[m - 1] == k[m - 2] &&
      ConjunctiveRule(Slice(n, 0, m - 1), Slice(k, 0, m - 1)) != 0) {
    return 5;
  }
  return 0;
}

void RequireCanonical(const HierarchyParams& p, HierarchyKind kind) {
  if (p.kind != kind) {
    throw Error(ErrorCode::kInvalidParams,
                std::string("expected ") + HierarchyKindName(kind) +
                    " parameters, got " + p.ToString());
  }
  if (!IsCanonical(p)) {
    throw Error(ErrorCode::kInvalidParams,
                "parameters are not canonical: " + p.ToString());
  }
}

// Builds {1^a_1, 2^a_2, ...} padded with zeros to `levels` entries.
Coalition Counts(std::initializer_list<int> counts, size_t levels) {
  std::vector<int> v(counts);
  v.resize(levels, 0);
  return Coalition(std::move(v));
}

TradingTransform Pad(const TradingTransform& t, size_t before, size_t after) {
  auto pad = [&](const Coalition& c) {
    std::vector<int> v(before, 0);
    v.insert(v.end(), c.counts().begin(), c.counts().end());
    v.resize(v.size() + after, 0);
    return Coalition(std::move(v));
  };
  TradingTransform out;
  for (const Coalition& c : t.x_side) out.x_side.push_back(pad(c));
  for (const Coalition& c : t.y_side) out.y_side.push_back(pad(c));
  return out;
}

// Certificate for canonical disjunctive parameters that fail every rule.
TradingTransform DisjunctiveCertificate(const Levels& n, const Levels& k) {
  const size_t m = n.size();
  if (m >= 2 && k[m - 1] >= k[m - 2] + n[m - 1]) {
    // Dummy last level takes no part.
    return Pad(DisjunctiveCertificate(Slice(n, 0, m - 1), Slice(k, 0, m - 1)), 0, 1);
  }
  if (m >= 2 && k[0] == 1) {
    // Passers on level 1 take no part.
    return Pad(DisjunctiveCertificate(Slice(n, 1, m), Slice(k, 1, m)), 1, 0);
  }
  if (m == 2) {
    const int k1 = k[0];
    const int d = k[1] - k[0] + 2;
    if (k[1] < k1 + 2 || n[1] < d) {
      throw Error(ErrorCode::kNoCertificate, "two-level game is weighted");
    }
    return TradingTransform{{Counts({k1, 0}, 2), Counts({k1 - 2, d}, 2)},
                            {Counts({k1 - 1, d / 2}, 2),
                             Counts({k1 - 1, (d + 1) / 2}, 2)}};
  }
  if (m < 3) throw Error(ErrorCode::kNoCertificate, "one-level game is weighted");
  const int k1 = k[0];
  const int k3 = k[2];
  const int n2 = n[1];
  const int n3 = n[2];
  if (k3 <= n3) {
    return TradingTransform{{Counts({k1, 0, 0}, m), Counts({0, 0, k3}, m)},
                            {Counts({k1 - 1, 0, 2}, m), Counts({1, 0, k3 - 2}, m)}};
  }
  if (k3 <= n2 + n3) {
    return TradingTransform{
        {Counts({k1, 0, 0}, m), Counts({0, k3 - n3, n3}, m)},
        {Counts({k1 - 1, 1, 1}, m), Counts({1, k3 - n3 - 1, n3 - 1}, m)}};
  }
  const int spill = k3 - n2 - n3;
  return TradingTransform{
      {Counts({k1, 0, 0}, m), Counts({spill, n2, n3}, m)},
      {Counts({k1 - 1, 1, 1}, m), Counts({spill + 1, n2 - 1, n3 - 1}, m)}};
}

Coalition Sum(const std::vector<Coalition>& side, int levels) {
  Coalition total = Coalition::Empty(levels);
  for (const Coalition& c : side) total += c;
  return total;
}

}  // namespace

bool TradingTransform::IsBalanced() const {
  if (x_side.empty() || x_side.size() != y_side.size()) return false;
  const int m = x_side.front().levels();
  for (const auto* side : {&x_side, &y_side}) {
    for (const Coalition& c : *side) {
      if (c.levels() != m) return false;
    }
  }
  return Sum(x_side, m) == Sum(y_side, m);
}

std::string TradingTransform::ToString() const {
  std::ostringstream out;
  auto side = [&out](const std::vector<Coalition>& cs) {
    for (size_t i = 0; i < cs.size(); ++i) {
      if (i) out << ',';
      out << '{' << cs[i].ToString() << '}';
    }
  };
  out << '(';
  side(x_side);
  out << ';';
  side(y_side);
  out << ')';
  return out.str();
}

Rational WeightedRepresentation::WeightOf(const Coalition& c) const {
  if (static_cast<size_t>(c.levels()) != weights.size()) {
    throw Error(ErrorCode::kInvalidCoalition,
                "coalition " + c.ToString() + " does not match the weights");
  }
  Rational total = 0;
  for (size_t i = 0; i < weights.size(); ++i) {
    total += weights[i] * c[static_cast<int>(i)];
  }
  return total;
}

bool WeightedRepresentation::Separates(const MultisetGame& game) const {
  if (static_cast<size_t>(game.levels()) != weights.size()) return false;
  if (std::any_of(weights.begin(), weights.end(),
                  [](const Rational& w) { return w < 0; })) {
    return false;
  }
  for (const Coalition& w : game.min_winning()) {
    if (WeightOf(w) < quota) return false;
  }
  for (const Coalition& l : MaximalLosing(game)) {
    if (WeightOf(l) >= quota) return false;
  }
  return true;
}

WeightednessDecision IsWeightedDisjunctive(const HierarchyParams& p) {
  RequireCanonical(p, HierarchyKind::kDisjunctive);
  const int rule = DisjunctiveRule(p.n, p.k);
  return {rule != 0, rule};
}

WeightednessDecision IsWeightedConjunctive(const HierarchyParams& p) {
  RequireCanonical(p, HierarchyKind::kConjunctive);
  const int rule = ConjunctiveRule(p.n, p.k);
  return {rule != 0, rule};
}

WeightednessDecision IsWeighted(const HierarchyParams& p) {
  return p.kind == HierarchyKind::kDisjunctive ? IsWeightedDisjunctive(p)
                                               : IsWeightedConjunctive(p);
}

TradingTransform CertificateOfNonweightedness(const HierarchyParams& p) {
  if (IsWeighted(p).weighted) {
    throw Error(ErrorCode::kNoCertificate,
                "weighted game has no certificate: " + p.ToString());
  }
  if (p.kind == HierarchyKind::kDisjunctive) {
    return DisjunctiveCertificate(p.n, p.k);
  }
  // Complements swap winning and losing between a game and its dual.
  const TradingTransform dual = DisjunctiveCertificate(p.n, DualParams(p).k);
  const PlayerMultiset players(p.n);
  TradingTransform t;
  for (const Coalition& c : dual.y_side) t.x_side.push_back(players.Complement(c));
  for (const Coalition& c : dual.x_side) t.y_side.push_back(players.Complement(c));
  return t;
}

bool VerifyTradingTransform(const MultisetGame& game, const TradingTransform& t) {
  for (const auto* side : {&t.x_side, &t.y_side}) {
    for (const Coalition& c : *side) game.players().Validate(c);
  }
  if (!t.IsBalanced()) return false;
  for (const Coalition& x : t.x_side) {
    if (!game.IsWinning(x)) return false;
  }
  for (const Coalition& y : t.y_side) {
    if (game.IsWinning(y)) return false;
  }
  return true;
}

std::optional<WeightedRepresentation> SynthesizeWeights(const MultisetGame& game) {
  const int m = game.levels();
  const std::vector<Coalition> losing = MaximalLosing(game);

  std::vector<LinearConstraint> constraints;
  for (int i = 0; i < m; ++i) {
    LinearConstraint nonnegative{std::vector<Rational>(static_cast<size_t>(m), 0), 0};
    nonnegative.coefficients[static_cast<size_t>(i)] = 1;
    constraints.push_back(std::move(nonnegative));
  }
  std::set<std::vector<int>> differences;
  for (const Coalition& x : game.min_winning()) {
    for (const Coalition& y : losing) differences.insert((x - y).counts());
  }
  for (const std::vector<int>& d : differences) {
    LinearConstraint gap{std::vector<Rational>(d.begin(), d.end()), 1};
    constraints.push_back(std::move(gap));
  }

  std::optional<std::vector<Rational>> weights = SolveLinearFeasibility(m, constraints);
  if (!weights) return std::nullopt;
  WeightedRepresentation rep{std::move(*weights), 0};
  bool first = true;
  for (const Coalition& x : game.min_winning()) {
    const Rational w = rep.WeightOf(x);
    if (first || w < rep.quota) rep.quota = w;
    first = false;
  }
  return rep;
}

std::optional<TradingTransform> SearchTradingTransform(const MultisetGame& game,
                                                       int max_len) {
  if (max_len < 2) {
    throw Error(ErrorCode::kInvalidParams, "max_len must be at least 2");
  }
  CheckEnumerable(game.players());
  std::vector<Coalition> candidates;
  try {
    candidates = ShiftMinimalWinning(game);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotComplete) throw;
    candidates = game.min_winning();
  }
  if (candidates.empty()) return std::nullopt;
  const auto losing = [&game](const Coalition& c) { return !game.IsWinning(c); };
  const int m = game.levels();
  const auto count = static_cast<int>(candidates.size());

  for (int length = 2; length <= max_len; ++length) {
    // Non-decreasing index tuples enumerate multisets of candidates.
    std::vector<int> pick(static_cast<size_t>(length), 0);
    while (true) {
      std::vector<Coalition> xs;
      for (int idx : pick) xs.push_back(candidates[static_cast<size_t>(idx)]);
      const Coalition pool = Sum(xs, m);
      if (auto ys = RepartitionExists(game.players(), pool, length, losing)) {
        return TradingTransform{std::move(xs), std::move(*ys)};
      }
      int i = length - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == count - 1) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < length; ++j) {
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(i)];
      }
    }
  }
  return std::nullopt;
}

}  // namespace hiergames
