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

// Exhaustive grid search. Deliberately naive: it shares nothing with the
// response and equilibrium code beyond payoff evaluation.

#ifndef PRIMING_ORACLE_H_
#define PRIMING_ORACLE_H_

#include <cstdint>
#include <span>
#include <vector>

#include "priming/engine.h"
#include "priming/model.h"

namespace priming {

// Investments in multiples of budget / resolution over num_issues issues.
struct GridSpec {
  size_t resolution = 1;
  size_t num_issues = 1;
  Rational budget = 1;
};

// Environment variable overriding the evaluation budget.
inline constexpr const char* kOracleBudgetVariable = "PRIMING_ORACLE_BUDGET";
inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

// kDefaultOracleBudget unless the environment variable holds a positive
// integer. Throws InputError on a malformed value.
std::uint64_t OracleBudget();

// All compositions of `resolution` units, in ascending lexicographic order.
// Throws InputError when resolution or num_issues is zero.
std::vector<Investment> GridStrategies(const GridSpec& spec);

// Grid for candidate c of `game`, spread over its active issues only (zero
// elsewhere). A candidate without budget has the single zero investment.
std::vector<Investment> CandidateGrid(const AggregatedGame& game, size_t c,
                                      size_t resolution);

struct GridBestResponse {
  Investment witness;
  Rational value;
  std::uint64_t evaluations = 0;
};

// Lowest lexicographic grid point on ties. Throws InputError once the
// evaluation count would exceed `budget`.
GridBestResponse BruteForceBestResponse(const AggregatedGame& game, size_t c,
                                        std::span<const Rational> opponents,
                                        const UtilityKind& kind, size_t resolution,
                                        std::uint64_t budget = OracleBudget());

// Every grid profile where no candidate gains more than epsilon by a grid
// deviation. Each profile in the product counts as one evaluation per
// candidate deviation.
std::vector<Profile> BruteForceEpsilonEquilibria(const AggregatedGame& game,
                                                 const UtilityKind& kind,
                                                 size_t resolution,
                                                 const Rational& epsilon,
                                                 std::uint64_t budget = OracleBudget());

// Largest gain any candidate obtains by a grid deviation from `profile`.
Rational GridDeviationGain(const AggregatedGame& game, const Profile& profile,
                           const UtilityKind& kind, size_t resolution,
                           std::uint64_t budget = OracleBudget());

}  // namespace priming

#endif  // PRIMING_ORACLE_H_
