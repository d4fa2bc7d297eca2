// Copyright 2026 The Priming Game Authors
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

// Exact rational linear feasibility and (linear-fractional) optimization.
//
// Variables are free unless constrained; sign restrictions are ordinary
// inequality rows. Everything runs on GMP rationals with Bland's rule, so
// results are exact and deterministic.

#ifndef PRIMING_FEASIBILITY_H_
#define PRIMING_FEASIBILITY_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "priming/rational.h"

namespace priming {

// coeffs . x  (=, >=, >)  rhs
struct LinearRow {
  RationalVector coeffs;
  Rational rhs;
};

struct LinearSystem {
  std::vector<std::string> variables;
  std::vector<LinearRow> equalities;
  std::vector<LinearRow> inequalities;
  // Only consulted by attainment checks; SolveFeasibility rejects them.
  std::vector<LinearRow> strict;

  size_t num_variables() const { return variables.size(); }
  size_t AddVariable(std::string name);
  void AddEquality(RationalVector coeffs, Rational rhs);
  void AddInequality(RationalVector coeffs, Rational rhs);
  void AddStrict(RationalVector coeffs, Rational rhs);
  // x_k >= 0 for every variable.
  void AddNonNegativity();

  // Describes the first malformed row, if any.
  std::optional<std::string> Malformed() const;
};

// Infeasibility proof: y (free, one per equality) and z >= 0 (one per weak
// inequality) with y^T A_eq + z^T A_ge = 0 and y^T b_eq + z^T b_ge > 0.
struct FarkasCertificate {
  RationalVector equality_multipliers;
  RationalVector inequality_multipliers;
};

bool VerifyFarkas(const LinearSystem& system, const FarkasCertificate& cert);

enum class SolveMethod {
  // Fourier-Motzkin when at most kFourierMotzkinMaxVariables remain after
  // eliminating equalities (falling back on row blow-up), simplex otherwise.
  kAuto,
  kSimplex,
  kFourierMotzkin,
};

inline constexpr size_t kFourierMotzkinMaxVariables = 6;

struct FeasibilityResult {
  bool feasible = false;
  RationalVector point;
  std::optional<FarkasCertificate> farkas;
  SolveMethod method = SolveMethod::kSimplex;
};

// Throws InputError for malformed rows or when strict rows are present.
FeasibilityResult SolveFeasibility(const LinearSystem& system,
                                   SolveMethod method = SolveMethod::kAuto);

struct AffineForm {
  RationalVector coeffs;
  Rational constant;

  Rational Evaluate(std::span<const Rational> point) const;
};

enum class OptimizationStatus { kOptimal, kInfeasible, kUnbounded };

std::string ToString(OptimizationStatus status);

struct OptimizationResult {
  OptimizationStatus status = OptimizationStatus::kInfeasible;
  Rational value;
  RationalVector point;
  std::optional<FarkasCertificate> farkas;
};

// max c.x + c0 over the equalities and weak inequalities (strict rows are
// ignored). The optimum is a basic solution.
OptimizationResult MaximizeLinear(const AffineForm& objective,
                                  const LinearSystem& system);

// (N.x + n0) / (D.x + d0), with D.x + d0 > 0 on the feasible set.
struct FractionalObjective {
  AffineForm numerator;
  AffineForm denominator;
};

// Charnes-Cooper: with y = t x and t = 1 / (D.x + d0), maximize N.y + n0 t
// subject to D.y + d0 t = 1, the homogenized constraints and t >= 0, then
// map back. Throws InvariantBreach if the denominator is not positive at the
// reported optimum. A zero scale at the optimum means the region is unbounded.
OptimizationResult MaximizeLinearFractional(const FractionalObjective& objective,
                                            const LinearSystem& system);

// True iff every strict row holds at `point`.
bool CheckStrict(std::span<const Rational> point,
                 const std::vector<LinearRow>& strict);

struct StrictPointResult {
  // Strict rows relaxed to weak ones are satisfiable.
  bool closure_feasible = false;
  bool strict_feasible = false;
  // Maximizer of the smallest strict slack (capped at 1). Empty when the
  // weak rows alone are infeasible.
  RationalVector point;
  Rational slack;
};

// Looks for a point satisfying equalities, weak rows and strict rows by
// maximizing the smallest strict slack. Exact: strict_feasible is true iff
// the open region is nonempty.
StrictPointResult FindStrictPoint(const LinearSystem& system);

namespace internal {

// Residual inequalities G t >= h over free variables, with a point or a
// certificate (z >= 0, z^T G = 0, z^T h > 0).
struct InequalitySolve {
  bool feasible = false;
  RationalVector point;
  RationalVector farkas;
};

InequalitySolve SimplexFeasibility(const std::vector<LinearRow>& rows,
                                   size_t num_variables);

// Returns std::nullopt when the intermediate row count exceeds `row_limit`.
std::optional<InequalitySolve> FourierMotzkin(const std::vector<LinearRow>& rows,
                                              size_t num_variables,
                                              size_t row_limit);

struct SimplexOutcome {
  OptimizationStatus status = OptimizationStatus::kInfeasible;
  Rational value;
  RationalVector point;
  RationalVector farkas;  // over rows, when infeasible
};

// max c.t + c0 subject to G t >= h, t free.
SimplexOutcome SimplexMaximize(const std::vector<LinearRow>& rows,
                               size_t num_variables, const AffineForm& objective);

}  // namespace internal
}  // namespace priming

#endif  // PRIMING_FEASIBILITY_H_
