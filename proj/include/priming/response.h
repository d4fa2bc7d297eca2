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

// Best responses of one candidate against a fixed pure opponent profile.
//
// Opponents enter only through w^{-c}, the per-issue sum of everyone else's
// spend: every payoff is a function of Q^d . (w^{-c} + w^c) for the
// candidates d, so nothing finer is needed.

#ifndef PRIMING_RESPONSE_H_
#define PRIMING_RESPONSE_H_

#include <span>
#include <string>
#include <vector>

#include "priming/engine.h"
#include "priming/model.h"
#include "priming/rational.h"

namespace priming {

struct BestResponseReport {
  UtilityKind kind = UtilityKind::Frac();
  size_t responder = 0;
  bool attained = true;
  // The optimum, or the supremum when not attained.
  Rational value;
  // Optimal when attained; otherwise within epsilon of `value`.
  Investment witness;
  // Frac only: every issue whose focused investment is optimal.
  std::vector<size_t> optimal_issues;
  std::string detail;
};

// Payoffs of all candidates when `responder` plays `investment` against
// opponents w^{-c}.
PayoffVector PayoffsAgainst(const AggregatedGame& game, size_t responder,
                            std::span<const Rational> opponents,
                            const Investment& investment,
                            const UtilityKind& kind);

BestResponseReport BestResponseFrac(const AggregatedGame& game, size_t c,
                                    std::span<const Rational> opponents);

// argmax_i (Q^c_i - Q^{c'}_i) over active issues, lowest index on ties.
// Throws InputError unless the game has exactly two candidates.
size_t DominantIssueInd2c(const AggregatedGame& game, size_t c);

BestResponseReport BestResponseInd(const AggregatedGame& game, size_t c,
                                   std::span<const Rational> opponents);

BestResponseReport BestResponseMax(const AggregatedGame& game, size_t c,
                                   std::span<const Rational> opponents,
                                   const Rational& victory_weight);

// Throws InputError when epsilon <= 0.
BestResponseReport BestResponsePlus(const AggregatedGame& game, size_t c,
                                    std::span<const Rational> opponents,
                                    const Rational& victory_weight,
                                    const Rational& epsilon);

// Dispatch on kind. `epsilon` is only used by Plus.
BestResponseReport BestResponse(const AggregatedGame& game, size_t c,
                                std::span<const Rational> opponents,
                                const UtilityKind& kind,
                                const Rational& epsilon);

}  // namespace priming

#endif  // PRIMING_RESPONSE_H_
