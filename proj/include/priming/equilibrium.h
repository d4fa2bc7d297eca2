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

#ifndef PRIMING_EQUILIBRIUM_H_
#define PRIMING_EQUILIBRIUM_H_

#include <optional>
#include <string>
#include <vector>

#include "priming/engine.h"
#include "priming/feasibility.h"
#include "priming/model.h"

namespace priming {

// Per candidate, the issues it may invest in.
using SupportAssignment = std::vector<std::vector<size_t>>;

struct DeviationCheck {
  size_t candidate = 0;
  Rational utility;
  // Best value found in the deviation family (supremum for Plus).
  Rational best_deviation_value;
  std::string family;
  // Present iff some deviation strictly improves.
  std::optional<Investment> improving_deviation;
  // Frac only: focused utilities agree across the candidate's support.
  bool support_indifferent = true;
};

enum class CertificateStatus { kEquilibrium, kNotEquilibrium, kUnknown };

std::string ToString(CertificateStatus status);

struct EquilibriumCertificate {
  CertificateStatus status = CertificateStatus::kUnknown;
  UtilityKind kind = UtilityKind::Frac();
  Profile profile;
  SupportAssignment supports;
  PayoffVector utilities;
  std::vector<DeviationCheck> checks;
  // Which routine produced the profile, plus its bookkeeping.
  std::string algorithm;
  size_t iterations = 0;
  // Issue visited by each candidate, in order (two-candidate process).
  std::vector<std::vector<size_t>> issue_trace;
  std::string note;

  bool valid() const { return status == CertificateStatus::kEquilibrium; }
};

// Checks every candidate for an improving deviation. Frac: focused
// deviations plus equal focused utility across each support. Ind and Max:
// exact best-response values. Plus: the best-response supremum, so a profile
// only passes when it attains it.
EquilibriumCertificate VerifyEquilibrium(const AggregatedGame& game,
                                         const Profile& profile,
                                         const UtilityKind& kind);

// Indifference and no-better-focus constraints for a support assignment,
// over variables w^c_i (i in I^c), with full-budget rows and w >= 0.
LinearSystem BuildSupportSystem(const AggregatedGame& game,
                                const SupportAssignment& supports);

// Support enumeration over active issues: total size ascending, then
// lexicographic. Returns the first feasible assignment, verified.
EquilibriumCertificate NashFracGeneral(const AggregatedGame& game);

// Frac, Plus, Max: focused best-improvement process. Ind: both candidates
// play their dominant issue. Throws InputError unless |C| = 2.
EquilibriumCertificate NashTwoCandidates(const AggregatedGame& game,
                                         const UtilityKind& kind);

// Round-robin best-response dynamics from `start` (default: everyone all-in
// on their lowest active issue). A candidate only moves when strictly
// improving. Status is kUnknown on a revisited profile or after max_rounds.
EquilibriumCertificate BestResponseDynamics(const AggregatedGame& game,
                                            const UtilityKind& kind,
                                            std::optional<Profile> start,
                                            size_t max_rounds);

EquilibriumCertificate EquilibriumSearchInd(const AggregatedGame& game,
                                            size_t max_rounds,
                                            std::optional<Profile> start = std::nullopt);

}  // namespace priming

#endif  // PRIMING_EQUILIBRIUM_H_
