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

// Dense two-phase tableau simplex over rationals with Bland's rule.
//
// The residual system G t >= h (t free) is brought into standard form
//   sigma_r (G_r t+ - G_r t- - s_r) = sigma_r h_r,   t+, t-, s >= 0,
// with sigma_r chosen so the right-hand side is nonnegative. Variables that
// carry an explicit single-variable lower bound t_k >= h/g with h >= 0 are
// known to be nonnegative and are not split.

#include <algorithm>

#include "priming/feasibility.h"

namespace priming::internal {
namespace {

struct Column {
  size_t variable;
  int sign;  // +1 for t+, -1 for t-
};

class Tableau {
 public:
  Tableau(const std::vector<LinearRow>& rows, size_t num_variables)
      : num_rows_(rows.size()), num_variables_(num_variables) {
    nonnegative_.assign(num_variables, false);
    bound_row_.assign(num_variables, rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
      size_t nonzero = 0;
      size_t var = 0;
      for (size_t k = 0; k < num_variables; ++k) {
        if (sgn(rows[r].coeffs[k]) != 0) {
          ++nonzero;
          var = k;
        }
      }
      if (nonzero == 1 && sgn(rows[r].coeffs[var]) > 0 && sgn(rows[r].rhs) >= 0 &&
          !nonnegative_[var]) {
        nonnegative_[var] = true;
        bound_row_[var] = r;
      }
    }
    for (size_t k = 0; k < num_variables; ++k) {
      columns_.push_back({k, +1});
      if (!nonnegative_[k]) columns_.push_back({k, -1});
    }
    slack_begin_ = columns_.size();
    artificial_begin_ = slack_begin_ + num_rows_;
    width_ = artificial_begin_ + num_rows_;

    sigma_.assign(num_rows_, 1);
    table_.assign(num_rows_, RationalVector(width_ + 1, Rational(0)));
    basis_.resize(num_rows_);
    for (size_t r = 0; r < num_rows_; ++r) {
      const LinearRow& row = rows[r];
      sigma_[r] = sgn(row.rhs) < 0 ? -1 : 1;
      RationalVector& t = table_[r];
      for (size_t j = 0; j < slack_begin_; ++j) {
        const Rational& g = row.coeffs[columns_[j].variable];
        if (sgn(g) != 0) t[j] = sigma_[r] * columns_[j].sign * g;
      }
      t[slack_begin_ + r] = -sigma_[r];
      t[artificial_begin_ + r] = 1;
      t[width_] = sigma_[r] * row.rhs;
      basis_[r] = artificial_begin_ + r;
    }
  }

  // Minimizes the sum of artificials. Returns the optimum (0 iff feasible).
  Rational PhaseOne() {
    RationalVector cost(width_, Rational(0));
    for (size_t r = 0; r < num_rows_; ++r) cost[artificial_begin_ + r] = 1;
    SetObjective(cost);
    Iterate(width_);
    return -objective_[width_];
  }

  // Dual multipliers of the phase-one optimum mapped to z >= 0 over the
  // original rows, adjusted so z^T G = 0 holds on unsplit columns as well.
  RationalVector Farkas(const std::vector<LinearRow>& rows) const {
    RationalVector z(num_rows_);
    for (size_t r = 0; r < num_rows_; ++r) {
      const Rational y = 1 - objective_[artificial_begin_ + r];
      z[r] = sigma_[r] * y;
    }
    for (size_t k = 0; k < num_variables_; ++k) {
      if (!nonnegative_[k]) continue;
      Rational combo = 0;
      for (size_t r = 0; r < num_rows_; ++r) combo += z[r] * rows[r].coeffs[k];
      if (sgn(combo) < 0) {
        const size_t b = bound_row_[k];
        z[b] -= combo / rows[b].coeffs[k];
      }
    }
    return z;
  }

  // Maximizes c.t after a successful phase one. Returns false if unbounded.
  bool PhaseTwo(std::span<const Rational> c) {
    DriveOutArtificials();
    RationalVector cost(width_, Rational(0));
    for (size_t j = 0; j < slack_begin_; ++j) {
      const Rational& ck = c[columns_[j].variable];
      if (sgn(ck) != 0) cost[j] = -columns_[j].sign * ck;
    }
    SetObjective(cost);
    return Iterate(artificial_begin_);
  }

  RationalVector Point() const {
    RationalVector t(num_variables_, Rational(0));
    for (size_t r = 0; r < num_rows_; ++r) {
      const size_t j = basis_[r];
      if (j < slack_begin_) {
        t[columns_[j].variable] += columns_[j].sign * table_[r][width_];
      }
    }
    return t;
  }

 private:
  void SetObjective(const RationalVector& cost) {
    objective_.assign(width_ + 1, Rational(0));
    for (size_t j = 0; j < width_; ++j) objective_[j] = cost[j];
    for (size_t r = 0; r < num_rows_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (size_t j = 0; j <= width_; ++j) {
        if (sgn(table_[r][j]) != 0) objective_[j] -= cb * table_[r][j];
      }
    }
  }

  // Bland's rule on columns [0, limit). Returns false when unbounded.
  bool Iterate(size_t limit) {
    while (true) {
      size_t entering = limit;
      for (size_t j = 0; j < limit; ++j) {
        if (sgn(objective_[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == limit) return true;
      size_t leaving = num_rows_;
      Rational best_ratio;
      for (size_t r = 0; r < num_rows_; ++r) {
        if (sgn(table_[r][entering]) <= 0) continue;
        Rational ratio = table_[r][width_] / table_[r][entering];
        if (leaving == num_rows_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == num_rows_) return false;
      Pivot(leaving, entering);
    }
  }

  void DriveOutArtificials() {
    for (size_t r = 0; r < num_rows_; ++r) {
      if (basis_[r] < artificial_begin_) continue;
      for (size_t j = 0; j < artificial_begin_; ++j) {
        if (sgn(table_[r][j]) != 0) {
          Pivot(r, j);
          break;
        }
      }
    }
  }

  void Pivot(size_t row, size_t col) {
    RationalVector& p = table_[row];
    const Rational inv = 1 / p[col];
    for (size_t j = 0; j <= width_; ++j) {
      if (sgn(p[j]) != 0) p[j] *= inv;
    }
    std::vector<size_t> nz;
    for (size_t j = 0; j <= width_; ++j) {
      if (sgn(p[j]) != 0) nz.push_back(j);
    }
    auto eliminate = [&](RationalVector& target) {
      if (sgn(target[col]) == 0) return;
      const Rational f = target[col];
      for (size_t j : nz) target[j] -= f * p[j];
    };
    for (size_t r = 0; r < num_rows_; ++r) {
      if (r != row) eliminate(table_[r]);
    }
    eliminate(objective_);
    basis_[row] = col;
  }

  size_t num_rows_;
  size_t num_variables_;
  std::vector<bool> nonnegative_;
  std::vector<size_t> bound_row_;
  std::vector<Column> columns_;
  size_t slack_begin_ = 0;
  size_t artificial_begin_ = 0;
  size_t width_ = 0;
  std::vector<int> sigma_;
  std::vector<RationalVector> table_;
  RationalVector objective_;
  std::vector<size_t> basis_;
};

}  // namespace

InequalitySolve SimplexFeasibility(const std::vector<LinearRow>& rows,
                                   size_t num_variables) {
  InequalitySolve out;
  Tableau tableau(rows, num_variables);
  if (sgn(tableau.PhaseOne()) > 0) {
    out.farkas = tableau.Farkas(rows);
    return out;
  }
  out.feasible = true;
  out.point = tableau.Point();
  return out;
}

SimplexOutcome SimplexMaximize(const std::vector<LinearRow>& rows,
                               size_t num_variables, const AffineForm& objective) {
  SimplexOutcome out;
  Tableau tableau(rows, num_variables);
  if (sgn(tableau.PhaseOne()) > 0) {
    out.status = OptimizationStatus::kInfeasible;
    out.farkas = tableau.Farkas(rows);
    return out;
  }
  if (!tableau.PhaseTwo(objective.coeffs)) {
    out.status = OptimizationStatus::kUnbounded;
    return out;
  }
  out.status = OptimizationStatus::kOptimal;
  out.point = tableau.Point();
  out.value = objective.Evaluate(out.point);
  return out;
}

}  // namespace priming::internal
