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

#ifndef HIERGAMES_FEASIBILITY_H_
#define HIERGAMES_FEASIBILITY_H_

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hiergames {

using Rational = boost::multiprecision::cpp_rational;

// "3", "-1/2"
std::string FormatRational(const Rational& r);

// sum_i coefficients[i] * x_i >= bound
struct LinearConstraint {
  std::vector<Rational> coefficients;
  Rational bound;
};

// Exact feasibility of a system of closed linear inequalities by
// Fourier-Motzkin elimination. Returns a solution, or nothing when the
// system is infeasible. Each variable is set to the largest of its lower
// bounds during back-substitution (0 when it has none and 0 is allowed).
std::optional<std::vector<Rational>> SolveLinearFeasibility(
    int variables, const std::vector<LinearConstraint>& constraints);

}  // namespace hiergames

#endif  // HIERGAMES_FEASIBILITY_H_
