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

#ifndef HIERGAMES_WEIGHTED_H_
#define HIERGAMES_WEIGHTED_H_

#include <optional>
#include <string>
#include <vector>

#include "hiergames/feasibility.h"
#include "hiergames/game.h"
#include "hiergames/hierarchy.h"

namespace hiergames {

// (X_1..X_j ; Y_1..Y_j): the Y side is a rearrangement of the X side's
// players. A certificate of non-weightedness when every X wins and every Y
// loses.
struct TradingTransform {
  std::vector<Coalition> x_side;
  std::vector<Coalition> y_side;

  int length() const { return static_cast<int>(x_side.size()); }
  // Equal non-zero lengths and equal per-level totals on both sides.
  bool IsBalanced() const;
  // "({(2,0)},{(0,4)};{(1,2)},{(1,2)})"
  std::string ToString() const;

  friend bool operator==(const TradingTransform&, const TradingTransform&) = default;
};

// One weight per level and a quota: c wins iff sum_i c_i w_i >= quota.
struct WeightedRepresentation {
  std::vector<Rational> weights;
  Rational quota;

  Rational WeightOf(const Coalition& c) const;
  // Every minimal winning coalition reaches the quota and every maximal
  // losing coalition stays strictly below it.
  bool Separates(const MultisetGame& game) const;
};

// Outcome of the closed-form test. `rule` is the number (1..5) of the first
// matching weightedness condition, 0 when none applies.
struct WeightednessDecision {
  bool weighted = false;
  int rule = 0;

  friend bool operator==(const WeightednessDecision&,
                         const WeightednessDecision&) = default;
};

// Both require canonical parameters of the matching kind (kInvalidParams).
WeightednessDecision IsWeightedDisjunctive(const HierarchyParams& p);
WeightednessDecision IsWeightedConjunctive(const HierarchyParams& p);
WeightednessDecision IsWeighted(const HierarchyParams& p);

// Explicit certificate for canonical non-weighted parameters. Throws
// kNoCertificate for weighted ones.
TradingTransform CertificateOfNonweightedness(const HierarchyParams& p);

bool VerifyTradingTransform(const MultisetGame& game, const TradingTransform& t);

// Exact weights separating minimal winning from maximal losing coalitions
// with a gap of 1, or nothing when none exist.
std::optional<WeightedRepresentation> SynthesizeWeights(const MultisetGame& game);

constexpr int kDefaultMaxTransformLength = 4;

// Exhaustive search for a certificate of length 2..max_len. The X side
// ranges over shift-minimal winning coalitions for complete games with
// ordered levels, over minimal winning coalitions otherwise.
std::optional<TradingTransform> SearchTradingTransform(
    const MultisetGame& game, int max_len = kDefaultMaxTransformLength);

}  // namespace hiergames

#endif  // HIERGAMES_WEIGHTED_H_
