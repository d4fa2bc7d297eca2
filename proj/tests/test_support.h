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

// Random instances and small helpers shared by the test binaries. Nothing
// here calls into response/equilibrium code: expected values are computed
// from first principles.

#ifndef PRIMING_TESTS_TEST_SUPPORT_H_
#define PRIMING_TESTS_TEST_SUPPORT_H_

#include <random>
#include <string>
#include <vector>

#include "priming/model.h"
#include "priming/rational.h"

namespace priming::testing {

using Rng = std::mt19937_64;

inline size_t Uniform(Rng& rng, size_t lo, size_t hi) {
  return std::uniform_int_distribution<size_t>(lo, hi)(rng);
}

// gmpxx leaves Rational(p, q) unreduced, which breaks exact comparison.
inline Rational Q(long p, long q = 1) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

// p/q with 0 <= p <= max_num, 1 <= q <= max_den.
inline Rational RandomRational(Rng& rng, long max_num = 20, long max_den = 20) {
  const long p = std::uniform_int_distribution<long>(0, max_num)(rng);
  const long q = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Q(p, q);
}

// Nonnegative entries with the given sum, denominators bounded by max_den.
inline RationalVector RandomSplit(Rng& rng, size_t n, const Rational& total, long max_den = 20) {
  RationalVector w(n);
  Rational sum = 0;
  for (auto& x : w) {
    x = RandomRational(rng, max_den, max_den);
    sum += x;
  }
  if (sgn(sum) == 0) {
    w[0] = total;
    return w;
  }
  for (auto& x : w) x = x * total / sum;
  return w;
}

inline std::vector<std::string> Names(const std::string& prefix, size_t n) {
  std::vector<std::string> out;
  for (size_t k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k + 1));
  return out;
}

// Valid voter-level instance. Quality columns per issue sum to at most 1,
// saliences sum to 1, and every budget is positive.
inline ElectionInstance RandomInstance(Rng& rng, size_t nc, size_t ni, size_t nv) {
  ElectionInstance inst;
  inst.candidates = Names("c", nc);
  inst.issues = Names("i", ni);
  for (size_t i = 0; i < ni; ++i) inst.elasticities.push_back(RandomRational(rng, 10, 5));
  for (size_t c = 0; c < nc; ++c) inst.budgets.push_back(RandomRational(rng, 20, 20) + 1);
  for (size_t v = 0; v < nv; ++v) {
    VoterRecord rec;
    rec.quality.assign(nc, RationalVector(ni));
    for (size_t i = 0; i < ni; ++i) {
      // nc + 1 parts so the column may leave mass unassigned.
      const RationalVector col = RandomSplit(rng, nc + 1, RandomRational(rng, 20, 20) / 20 + Rational(1, 20));
      for (size_t c = 0; c < nc; ++c) rec.quality[c][i] = col[c] > 1 ? Rational(1) : col[c];
    }
    rec.salience0 = RandomSplit(rng, ni, 1);
    inst.voters.push_back(std::move(rec));
  }
  return inst;
}

// Compact game with positive ranks on every issue (slack included).
inline AggregatedGame RandomGame(Rng& rng, size_t nc, size_t ni, bool positive_slack = true) {
  std::vector<RationalVector> ranks(nc);
  RationalVector budgets;
  for (size_t c = 0; c < nc; ++c) {
    const Rational bias = positive_slack ? RandomRational(rng, 10, 10) + Rational(1, 10) : Rational(0);
    ranks[c].push_back(bias);
    for (size_t i = 0; i < ni; ++i) ranks[c].push_back(bias + RandomRational(rng, 20, 10));
    budgets.push_back(RandomRational(rng, 20, 10) + Rational(1, 10));
  }
  return AggregatedGame(Names("c", nc), Names("i", ni), std::move(ranks), std::move(budgets));
}

// Full-budget investment for c on the game's active issues.
inline Investment RandomInvestment(Rng& rng, const AggregatedGame& game, size_t c) {
  Investment inv = Investment::Zero(game.num_issues());
  const auto& active = game.active_issues();
  if (active.empty()) return inv;
  // Random support, then random split over it.
  std::vector<size_t> support;
  for (size_t i : active) {
    if (Uniform(rng, 0, 1)) support.push_back(i);
  }
  if (support.empty()) support.push_back(active[Uniform(rng, 0, active.size() - 1)]);
  const RationalVector split = RandomSplit(rng, support.size(), game.budget(c));
  for (size_t k = 0; k < support.size(); ++k) inv[support[k]] = split[k];
  return inv;
}

inline Profile RandomProfile(Rng& rng, const AggregatedGame& game) {
  std::vector<Investment> invs;
  for (size_t c = 0; c < game.num_candidates(); ++c) invs.push_back(RandomInvestment(rng, game, c));
  return Profile(std::move(invs));
}

// u_frac of c playing `own` against w^{-c}, straight from the definition.
inline Rational ShareOf(const AggregatedGame& game, size_t c, const RationalVector& opponents,
                        const Investment& own) {
  Rational num = 0, den = 0;
  for (size_t i = 0; i < game.num_issues(); ++i) {
    const Rational w = opponents[i] + own[i];
    num += game.rank(c, i) * w;
    den += game.rank_sum(i) * w;
  }
  return num / den;
}

}  // namespace priming::testing

#endif  // PRIMING_TESTS_TEST_SUPPORT_H_
