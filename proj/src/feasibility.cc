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

#include "priming/feasibility.h"

namespace priming {

size_t LinearSystem::AddVariable(std::string name) {
  variables.push_back(std::move(name));
  for (auto* rows : {&equalities, &inequalities, &strict}) {
    for (LinearRow& row : *rows) row.coeffs.emplace_back(0);
  }
  return variables.size() - 1;
}

void LinearSystem::AddEquality(RationalVector coeffs, Rational rhs) {
  equalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::AddInequality(RationalVector coeffs, Rational rhs) {
  inequalities.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::AddStrict(RationalVector coeffs, Rational rhs) {
  strict.push_back({std::move(coeffs), std::move(rhs)});
}

void LinearSystem::AddNonNegativity() {
  for (size_t k = 0; k < num_variables(); ++k) {
    RationalVector row(num_variables(), Rational(0));
    row[k] = 1;
    AddInequality(std::move(row), 0);
  }
}

std::optional<std::string> LinearSystem::Malformed() const {
  const size_t n = num_variables();
  auto check = [n](const std::vector<LinearRow>& rows,
                   const char* kind) -> std::optional<std::string> {
    for (size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].coeffs.size() != n) {
        return std::string(kind) + " row " + std::to_string(r) + " has " +
               std::to_string(rows[r].coeffs.size()) + " coefficients, expected " +
               std::to_string(n);
      }
    }
    return std::nullopt;
  };
  if (auto e = check(equalities, "equality")) return e;
  if (auto e = check(inequalities, "inequality")) return e;
  return check(strict, "strict");
}

bool VerifyFarkas(const LinearSystem& system, const FarkasCertificate& cert) {
  if (cert.equality_multipliers.size() != system.equalities.size() ||
      cert.inequality_multipliers.size() != system.inequalities.size()) {
    return false;
  }
  RationalVector combo(system.num_variables(), Rational(0));
  Rational rhs = 0;
  for (size_t e = 0; e < system.equalities.size(); ++e) {
    const Rational& y = cert.equality_multipliers[e];
    if (sgn(y) == 0) continue;
    for (size_t k = 0; k < combo.size(); ++k) combo[k] += y * system.equalities[e].coeffs[k];
    rhs += y * system.equalities[e].rhs;
  }
  for (size_t r = 0; r < system.inequalities.size(); ++r) {
    const Rational& z = cert.inequality_multipliers[r];
    if (sgn(z) < 0) return false;
    if (sgn(z) == 0) continue;
    for (size_t k = 0; k < combo.size(); ++k) combo[k] += z * system.inequalities[r].coeffs[k];
    rhs += z * system.inequalities[r].rhs;
  }
  for (const Rational& c : combo) {
    if (sgn(c) != 0) return false;
  }
  return sgn(rhs) > 0;
}

Rational AffineForm::Evaluate(std::span<const Rational> point) const {
  return Dot(coeffs, point) + constant;
}

std::string ToString(OptimizationStatus status) {
  switch (status) {
    case OptimizationStatus::kOptimal: return "optimal";
    case OptimizationStatus::kInfeasible: return "infeasible";
    case OptimizationStatus::kUnbounded: return "unbounded";
  }
  return "?";
}

bool CheckStrict(std::span<const Rational> point,
                 const std::vector<LinearRow>& strict) {
  for (const LinearRow& row : strict) {
    if (row.coeffs.size() != point.size()) {
      throw InputError("strict row width does not match the point");
    }
    if (!(Dot(row.coeffs, point) > row.rhs)) return false;
  }
  return true;
}

namespace {

// Equalities eliminated by Gauss-Jordan: x = offset + basis * t, where t are
// the non-pivot variables. `transform` holds, per reduced row, the
// combination of original equality rows producing it.
struct Reduction {
  bool consistent = true;
  FarkasCertificate farkas;  // filled when inconsistent
  RationalVector offset;
  std::vector<RationalVector> basis;  // [variable][free index]
  std::vector<size_t> free_variables;
  std::vector<size_t> pivot_columns;
  std::vector<RationalVector> pivot_transform;  // per pivot row
  std::vector<LinearRow> residual;              // over t
};

Reduction Reduce(const LinearSystem& system) {
  const size_t n = system.num_variables();
  const size_t m = system.equalities.size();
  Reduction red;
  std::vector<RationalVector> a(m);
  RationalVector b(m);
  std::vector<RationalVector> transform(m, RationalVector(m, Rational(0)));
  for (size_t e = 0; e < m; ++e) {
    a[e] = system.equalities[e].coeffs;
    b[e] = system.equalities[e].rhs;
    transform[e][e] = 1;
  }

  size_t row = 0;
  std::vector<bool> is_pivot(n, false);
  for (size_t col = 0; col < n && row < m; ++col) {
    size_t pick = m;
    for (size_t r = row; r < m; ++r) {
      if (sgn(a[r][col]) != 0) {
        pick = r;
        break;
      }
    }
    if (pick == m) continue;
    std::swap(a[row], a[pick]);
    std::swap(b[row], b[pick]);
    std::swap(transform[row], transform[pick]);
    const Rational inv = 1 / a[row][col];
    for (Rational& x : a[row]) x *= inv;
    b[row] *= inv;
    for (Rational& x : transform[row]) x *= inv;
    for (size_t r = 0; r < m; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      const Rational f = a[r][col];
      for (size_t k = 0; k < n; ++k) a[r][k] -= f * a[row][k];
      b[r] -= f * b[row];
      for (size_t k = 0; k < m; ++k) transform[r][k] -= f * transform[row][k];
    }
    is_pivot[col] = true;
    red.pivot_columns.push_back(col);
    ++row;
  }
  for (size_t r = row; r < m; ++r) {
    if (sgn(b[r]) != 0) {
      red.consistent = false;
      red.farkas.equality_multipliers.resize(m);
      for (size_t k = 0; k < m; ++k) red.farkas.equality_multipliers[k] = transform[r][k] / b[r];
      red.farkas.inequality_multipliers.assign(system.inequalities.size(), Rational(0));
      return red;
    }
  }
  red.pivot_transform.assign(transform.begin(), transform.begin() + row);

  for (size_t k = 0; k < n; ++k) {
    if (!is_pivot[k]) red.free_variables.push_back(k);
  }
  const size_t f = red.free_variables.size();
  red.offset.assign(n, Rational(0));
  red.basis.assign(n, RationalVector(f, Rational(0)));
  for (size_t t = 0; t < f; ++t) red.basis[red.free_variables[t]][t] = 1;
  for (size_t p = 0; p < red.pivot_columns.size(); ++p) {
    const size_t var = red.pivot_columns[p];
    red.offset[var] = b[p];
    for (size_t t = 0; t < f; ++t) {
      red.basis[var][t] = -a[p][red.free_variables[t]];
    }
  }

  for (const LinearRow& row_in : system.inequalities) {
    LinearRow out{RationalVector(f, Rational(0)), row_in.rhs - Dot(row_in.coeffs, red.offset)};
    for (size_t k = 0; k < n; ++k) {
      const Rational& g = row_in.coeffs[k];
      if (sgn(g) == 0) continue;
      for (size_t t = 0; t < f; ++t) {
        if (sgn(red.basis[k][t]) != 0) out.coeffs[t] += g * red.basis[k][t];
      }
    }
    red.residual.push_back(std::move(out));
  }
  return red;
}

RationalVector Expand(const Reduction& red, std::span<const Rational> t) {
  RationalVector x = red.offset;
  for (size_t k = 0; k < x.size(); ++k) {
    for (size_t j = 0; j < t.size(); ++j) {
      if (sgn(red.basis[k][j]) != 0 && sgn(t[j]) != 0) x[k] += red.basis[k][j] * t[j];
    }
  }
  return x;
}

// Lifts a residual certificate z to the original system by expressing
// -sum z_r a_r in the row space of the equalities.
FarkasCertificate Lift(const LinearSystem& system, const Reduction& red,
                       const RationalVector& z) {
  FarkasCertificate cert;
  cert.inequality_multipliers = z;
  const size_t n = system.num_variables();
  RationalVector u(n, Rational(0));
  for (size_t r = 0; r < z.size(); ++r) {
    if (sgn(z[r]) == 0) continue;
    for (size_t k = 0; k < n; ++k) u[k] += z[r] * system.inequalities[r].coeffs[k];
  }
  cert.equality_multipliers.assign(system.equalities.size(), Rational(0));
  for (size_t p = 0; p < red.pivot_columns.size(); ++p) {
    const Rational coef = -u[red.pivot_columns[p]];
    if (sgn(coef) == 0) continue;
    for (size_t e = 0; e < cert.equality_multipliers.size(); ++e) {
      cert.equality_multipliers[e] += coef * red.pivot_transform[p][e];
    }
  }
  if (!VerifyFarkas(system, cert)) {
    throw InvariantBreach("lifted infeasibility certificate does not verify");
  }
  return cert;
}

void RequireWellFormed(const LinearSystem& system) {
  if (auto err = system.Malformed()) throw InputError("malformed linear system: " + *err);
}

}  // namespace

FeasibilityResult SolveFeasibility(const LinearSystem& system, SolveMethod method) {
  RequireWellFormed(system);
  if (!system.strict.empty()) {
    throw InputError("strict inequalities belong to attainment checks, not feasibility");
  }
  FeasibilityResult result;
  const Reduction red = Reduce(system);
  if (!red.consistent) {
    result.farkas = red.farkas;
    result.method = method == SolveMethod::kFourierMotzkin ? method : SolveMethod::kSimplex;
    return result;
  }
  const size_t free_count = red.free_variables.size();
  std::optional<internal::InequalitySolve> solve;
  if (method == SolveMethod::kFourierMotzkin ||
      (method == SolveMethod::kAuto && free_count <= kFourierMotzkinMaxVariables)) {
    const size_t limit = method == SolveMethod::kFourierMotzkin ? size_t{1} << 22 : 4096;
    solve = internal::FourierMotzkin(red.residual, free_count, limit);
    if (solve) result.method = SolveMethod::kFourierMotzkin;
    if (!solve && method == SolveMethod::kFourierMotzkin) {
      throw InputError("Fourier-Motzkin row limit exceeded");
    }
  }
  if (!solve) {
    solve = internal::SimplexFeasibility(red.residual, free_count);
    result.method = SolveMethod::kSimplex;
  }
  if (!solve->feasible) {
    result.farkas = Lift(system, red, solve->farkas);
    return result;
  }
  result.feasible = true;
  result.point = Expand(red, solve->point);
  return result;
}

OptimizationResult MaximizeLinear(const AffineForm& objective,
                                  const LinearSystem& system) {
  RequireWellFormed(system);
  if (objective.coeffs.size() != system.num_variables()) {
    throw InputError("objective width does not match the system");
  }
  OptimizationResult result;
  const Reduction red = Reduce(system);
  if (!red.consistent) {
    result.status = OptimizationStatus::kInfeasible;
    result.farkas = red.farkas;
    return result;
  }
  // c.x + c0 = c.(offset + basis t) + c0.
  AffineForm reduced{RationalVector(red.free_variables.size(), Rational(0)),
                     objective.Evaluate(red.offset)};
  for (size_t k = 0; k < system.num_variables(); ++k) {
    if (sgn(objective.coeffs[k]) == 0) continue;
    for (size_t t = 0; t < reduced.coeffs.size(); ++t) {
      reduced.coeffs[t] += objective.coeffs[k] * red.basis[k][t];
    }
  }
  internal::SimplexOutcome outcome =
      internal::SimplexMaximize(red.residual, red.free_variables.size(), reduced);
  result.status = outcome.status;
  if (outcome.status == OptimizationStatus::kInfeasible) {
    result.farkas = Lift(system, red, outcome.farkas);
  } else if (outcome.status == OptimizationStatus::kOptimal) {
    result.point = Expand(red, outcome.point);
    result.value = objective.Evaluate(result.point);
  }
  return result;
}

OptimizationResult MaximizeLinearFractional(const FractionalObjective& objective,
                                            const LinearSystem& system) {
  RequireWellFormed(system);
  const size_t n = system.num_variables();
  if (objective.numerator.coeffs.size() != n || objective.denominator.coeffs.size() != n) {
    throw InputError("objective width does not match the system");
  }
  OptimizationResult result;
  LinearSystem plain = system;
  plain.strict.clear();
  FeasibilityResult feasible = SolveFeasibility(plain, SolveMethod::kSimplex);
  if (!feasible.feasible) {
    result.status = OptimizationStatus::kInfeasible;
    result.farkas = feasible.farkas;
    return result;
  }

  // Variables (y_0..y_{n-1}, scale).
  LinearSystem lifted;
  for (const std::string& name : system.variables) lifted.AddVariable("y_" + name);
  const size_t scale = lifted.AddVariable("scale");
  auto homogenize = [&](const LinearRow& row) {
    RationalVector coeffs = row.coeffs;
    coeffs.push_back(-row.rhs);
    return coeffs;
  };
  for (const LinearRow& row : system.equalities) lifted.AddEquality(homogenize(row), 0);
  for (const LinearRow& row : system.inequalities) lifted.AddInequality(homogenize(row), 0);
  RationalVector norm = objective.denominator.coeffs;
  norm.push_back(objective.denominator.constant);
  lifted.AddEquality(std::move(norm), 1);
  RationalVector scale_row(n + 1, Rational(0));
  scale_row[scale] = 1;
  lifted.AddInequality(std::move(scale_row), 0);

  AffineForm linear{objective.numerator.coeffs, 0};
  linear.coeffs.push_back(objective.numerator.constant);
  OptimizationResult lp = MaximizeLinear(linear, lifted);
  if (lp.status == OptimizationStatus::kInfeasible) {
    throw InvariantBreach("denominator is not positive anywhere on a nonempty region");
  }
  if (lp.status == OptimizationStatus::kUnbounded || sgn(lp.point[scale]) == 0) {
    result.status = OptimizationStatus::kUnbounded;
    return result;
  }
  result.status = OptimizationStatus::kOptimal;
  result.point.resize(n);
  for (size_t k = 0; k < n; ++k) result.point[k] = lp.point[k] / lp.point[scale];
  const Rational den = objective.denominator.Evaluate(result.point);
  if (sgn(den) <= 0) {
    throw InvariantBreach("denominator is not positive at the fractional optimum");
  }
  result.value = objective.numerator.Evaluate(result.point) / den;
  return result;
}

StrictPointResult FindStrictPoint(const LinearSystem& system) {
  RequireWellFormed(system);
  LinearSystem lifted;
  lifted.variables = system.variables;
  const size_t n = system.num_variables();
  lifted.variables.push_back("strict_slack");
  auto widen = [](RationalVector coeffs, const Rational& last) {
    coeffs.push_back(last);
    return coeffs;
  };
  for (const LinearRow& row : system.equalities) lifted.AddEquality(widen(row.coeffs, 0), row.rhs);
  for (const LinearRow& row : system.inequalities) lifted.AddInequality(widen(row.coeffs, 0), row.rhs);
  for (const LinearRow& row : system.strict) lifted.AddInequality(widen(row.coeffs, -1), row.rhs);
  RationalVector cap(n + 1, Rational(0));
  cap[n] = -1;
  lifted.AddInequality(std::move(cap), -1);  // slack <= 1

  RationalVector objective(n + 1, Rational(0));
  objective[n] = 1;
  OptimizationResult lp = MaximizeLinear(AffineForm{std::move(objective), 0}, lifted);
  StrictPointResult out;
  if (lp.status != OptimizationStatus::kOptimal) return out;
  out.slack = lp.point[n];
  out.closure_feasible = sgn(out.slack) >= 0;
  out.point.assign(lp.point.begin(), lp.point.begin() + n);
  out.strict_feasible = sgn(out.slack) > 0;
  return out;
}

}  // namespace priming
