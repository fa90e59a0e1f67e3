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

#include "hiergames/feasibility.h"

#include <map>

#include "hiergames/error.h"

namespace hiergames {
namespace {

using System = std::vector<LinearConstraint>;

// Constraints sharing a direction collapse to the tightest one; directions
// are scaled so their first non-zero coefficient is +1 or -1.
class ConstraintSet {
 public:
  // Returns false when the constraint is 0 >= b with b > 0.
  bool Add(LinearConstraint c) {
    size_t lead = 0;
    while (lead < c.coefficients.size() && c.coefficients[lead] == 0) ++lead;
    if (lead == c.coefficients.size()) return c.bound <= 0;
    const Rational scale = abs(c.coefficients[lead]);
    for (Rational& a : c.coefficients) a /= scale;
    c.bound /= scale;
    auto [it, inserted] = tightest_.try_emplace(c.coefficients, c.bound);
    if (!inserted && c.bound > it->second) it->second = c.bound;
    return true;
  }

  System Take() const {
    System out;
    out.reserve(tightest_.size());
    for (const auto& [a, b] : tightest_) out.push_back({a, b});
    return out;
  }

 private:
  std::map<std::vector<Rational>, Rational> tightest_;
};

}  // namespace

std::string FormatRational(const Rational& r) {
  const auto num = numerator(r);
  const auto den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<std::vector<Rational>> SolveLinearFeasibility(
    int variables, const std::vector<LinearConstraint>& constraints) {
  const auto v = static_cast<size_t>(variables);
  ConstraintSet initial;
  for (const LinearConstraint& c : constraints) {
    if (c.coefficients.size() != v) {
      throw Error(ErrorCode::kInvalidParams, "constraint has the wrong arity");
    }
    if (!initial.Add(c)) return std::nullopt;
  }

  // stages[t] mentions only x_0..x_t (x_{t+1}.. already eliminated).
  std::vector<System> stages(v);
  System current = initial.Take();
  for (size_t t = v; t-- > 0;) {
    stages[t] = current;
    System lower, upper;
    ConstraintSet next;
    for (const LinearConstraint& c : current) {
      const Rational& a = c.coefficients[t];
      if (a > 0) {
        lower.push_back(c);
      } else if (a < 0) {
        upper.push_back(c);
      } else if (!next.Add(c)) {
        return std::nullopt;
      }
    }
    for (const LinearConstraint& lo : lower) {
      for (const LinearConstraint& hi : upper) {
        const Rational p = lo.coefficients[t];
        const Rational q = -hi.coefficients[t];
        LinearConstraint combined;
        combined.coefficients.resize(v);
        for (size_t i = 0; i < v; ++i) {
          combined.coefficients[i] = q * lo.coefficients[i] + p * hi.coefficients[i];
        }
        combined.coefficients[t] = 0;
        combined.bound = q * lo.bound + p * hi.bound;
        if (!next.Add(std::move(combined))) return std::nullopt;
      }
    }
    current = next.Take();
  }
  // `current` now holds constant constraints, all satisfied.

  std::vector<Rational> x(v, Rational(0));
  for (size_t t = 0; t < v; ++t) {
    std::optional<Rational> low, high;
    for (const LinearConstraint& c : stages[t]) {
      const Rational& a = c.coefficients[t];
      if (a == 0) continue;
      Rational rest = c.bound;
      for (size_t i = 0; i < t; ++i) rest -= c.coefficients[i] * x[i];
      const Rational limit = rest / a;
      if (a > 0) {
        if (!low || limit > *low) low = limit;
      } else {
        if (!high || limit < *high) high = limit;
      }
    }
    if (low) {
      x[t] = *low;
    } else if (high && *high < 0) {
      x[t] = *high;
    }
  }
  return x;
}

}  // namespace hiergames
