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

// Fourier-Motzkin elimination for G t >= h, t free. Each derived row keeps
// the nonnegative combination of input rows it came from, so a contradiction
// 0 >= h (h > 0) is directly a Farkas certificate.

#include <algorithm>
#include <map>

#include "priming/feasibility.h"

namespace priming::internal {
namespace {

struct TrackedRow {
  RationalVector coeffs;
  Rational rhs;
  RationalVector multipliers;
};

// Scales so the leading nonzero coefficient has magnitude one.
void Normalize(TrackedRow& row) {
  for (const Rational& g : row.coeffs) {
    if (sgn(g) == 0) continue;
    const Rational scale = 1 / abs(g);
    if (scale == 1) return;
    for (Rational& x : row.coeffs) x *= scale;
    row.rhs *= scale;
    for (Rational& m : row.multipliers) m *= scale;
    return;
  }
}

bool IsZero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

// Drops duplicates (keeping the tightest rhs) and trivially true rows.
// Returns the index of a contradictory row, if one exists.
std::optional<size_t> Simplify(std::vector<TrackedRow>& rows) {
  std::map<RationalVector, size_t> best;
  std::vector<TrackedRow> kept;
  for (TrackedRow& row : rows) {
    if (IsZero(row.coeffs)) {
      if (sgn(row.rhs) > 0) {
        kept.clear();
        kept.push_back(std::move(row));
        rows = std::move(kept);
        return 0;
      }
      continue;
    }
    Normalize(row);
    auto [it, inserted] = best.try_emplace(row.coeffs, kept.size());
    if (inserted) {
      kept.push_back(std::move(row));
    } else if (row.rhs > kept[it->second].rhs) {
      kept[it->second] = std::move(row);
    }
  }
  rows = std::move(kept);
  return std::nullopt;
}

}  // namespace

std::optional<InequalitySolve> FourierMotzkin(const std::vector<LinearRow>& input,
                                              size_t num_variables,
                                              size_t row_limit) {
  std::vector<TrackedRow> current;
  current.reserve(input.size());
  for (size_t r = 0; r < input.size(); ++r) {
    TrackedRow row{input[r].coeffs, input[r].rhs,
                   RationalVector(input.size(), Rational(0))};
    row.multipliers[r] = 1;
    current.push_back(std::move(row));
  }

  // stages[k] holds the system over variables 0..k-1 (stages[n] is the input).
  std::vector<std::vector<TrackedRow>> stages(num_variables + 1);
  InequalitySolve out;
  auto contradiction = [&](std::vector<TrackedRow>& rows) {
    out.feasible = false;
    out.farkas = rows.front().multipliers;
    return out;
  };
  if (Simplify(current)) return contradiction(current);
  stages[num_variables] = current;

  for (size_t k = num_variables; k-- > 0;) {
    std::vector<TrackedRow> positive, negative, next;
    for (TrackedRow& row : current) {
      const int s = sgn(row.coeffs[k]);
      if (s > 0) {
        positive.push_back(std::move(row));
      } else if (s < 0) {
        negative.push_back(std::move(row));
      } else {
        next.push_back(std::move(row));
      }
    }
    if (next.size() + positive.size() * negative.size() > row_limit) {
      return std::nullopt;
    }
    for (const TrackedRow& p : positive) {
      for (const TrackedRow& n : negative) {
        // (-n_k) * p + p_k * n cancels variable k with nonnegative weights.
        const Rational a = -n.coeffs[k];
        const Rational& b = p.coeffs[k];
        TrackedRow combined{RationalVector(num_variables), a * p.rhs + b * n.rhs,
                            RationalVector(input.size())};
        for (size_t v = 0; v < num_variables; ++v) {
          combined.coeffs[v] = a * p.coeffs[v] + b * n.coeffs[v];
        }
        combined.coeffs[k] = 0;
        for (size_t m = 0; m < input.size(); ++m) {
          combined.multipliers[m] = a * p.multipliers[m] + b * n.multipliers[m];
        }
        next.push_back(std::move(combined));
      }
    }
    if (Simplify(next)) return contradiction(next);
    current = std::move(next);
    stages[k] = current;
  }

  // Back substitution: pick the value closest to zero inside each interval.
  out.feasible = true;
  out.point.assign(num_variables, Rational(0));
  for (size_t k = 0; k < num_variables; ++k) {
    std::optional<Rational> lower, upper;
    for (const TrackedRow& row : stages[k + 1]) {
      const Rational& g = row.coeffs[k];
      if (sgn(g) == 0) continue;
      Rational rest = row.rhs;
      for (size_t v = 0; v < k; ++v) rest -= row.coeffs[v] * out.point[v];
      Rational bound = rest / g;
      if (sgn(g) > 0) {
        if (!lower || bound > *lower) lower = std::move(bound);
      } else {
        if (!upper || bound < *upper) upper = std::move(bound);
      }
    }
    Rational value = 0;
    if (lower && *lower > value) value = *lower;
    if (upper && *upper < value) value = *upper;
    out.point[k] = value;
  }
  return out;
}

}  // namespace priming::internal
