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

#include "priming/equilibrium.h"

#include <algorithm>
#include <map>

#include "priming/response.h"

namespace priming {

std::string ToString(CertificateStatus status) {
  switch (status) {
    case CertificateStatus::kEquilibrium: return "equilibrium";
    case CertificateStatus::kNotEquilibrium: return "not-equilibrium";
    case CertificateStatus::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

// Used for Plus checks; the verdict does not depend on it, only how close
// the reported deviation gets to the supremum.
const Rational kVerifyEpsilon(1, 1000);

DeviationCheck CheckFrac(const AggregatedGame& game, const Profile& profile,
                         size_t c, const Rational& utility) {
  DeviationCheck check;
  check.candidate = c;
  check.utility = utility;
  check.family = "focused deviations";
  const RationalVector opp = profile.TotalExcluding(c);
  BestResponseReport br = BestResponseFrac(game, c, opp);
  check.best_deviation_value = br.value;
  if (br.value > utility) check.improving_deviation = br.witness;
  std::optional<Rational> seen;
  for (size_t i : profile[c].Support()) {
    Rational f = FocusedUtility(game, c, i, opp);
    if (seen && f != *seen) check.support_indifferent = false;
    seen = std::move(f);
  }
  return check;
}

DeviationCheck CheckByBestResponse(const AggregatedGame& game, const Profile& profile,
                                   size_t c, const Rational& utility,
                                   const UtilityKind& kind) {
  DeviationCheck check;
  check.candidate = c;
  check.utility = utility;
  const RationalVector opp = profile.TotalExcluding(c);
  BestResponseReport br = BestResponse(game, c, opp, kind, kVerifyEpsilon);
  check.family = "exact best response (" + br.detail + ")";
  check.best_deviation_value = br.value;
  if (br.value > utility) {
    if (!br.attained) {
      Rational eps = (br.value - utility) / 2;
      if (eps > kVerifyEpsilon) eps = kVerifyEpsilon;
      br = BestResponse(game, c, opp, kind, eps);
    }
    check.improving_deviation = br.witness;
  }
  return check;
}

Profile FocusedProfile(const AggregatedGame& game, const std::vector<size_t>& issues) {
  std::vector<Investment> invs;
  for (size_t c = 0; c < issues.size(); ++c) {
    invs.push_back(Investment::Focused(game.num_issues(), issues[c], game.budget(c)));
  }
  return Profile(std::move(invs));
}

size_t FirstActive(const AggregatedGame& game) {
  return game.active_issues().empty() ? kSlackIssue : game.active_issues().front();
}

}  // namespace

EquilibriumCertificate VerifyEquilibrium(const AggregatedGame& game,
                                         const Profile& profile,
                                         const UtilityKind& kind) {
  RequireValidProfile(game, profile);
  kind.Validate(game.num_candidates());
  EquilibriumCertificate cert;
  cert.kind = kind;
  cert.profile = profile;
  cert.algorithm = "verify";
  cert.utilities = Utility(game, profile, kind);
  bool ok = true;
  for (size_t c = 0; c < game.num_candidates(); ++c) {
    cert.supports.push_back(profile[c].Support());
    DeviationCheck check =
        kind.tag() == UtilityKind::Tag::kFrac
            ? CheckFrac(game, profile, c, cert.utilities[c])
            : CheckByBestResponse(game, profile, c, cert.utilities[c], kind);
    if (check.improving_deviation || !check.support_indifferent) ok = false;
    cert.checks.push_back(std::move(check));
  }
  cert.status = ok ? CertificateStatus::kEquilibrium : CertificateStatus::kNotEquilibrium;
  return cert;
}

LinearSystem BuildSupportSystem(const AggregatedGame& game,
                                const SupportAssignment& supports) {
  const size_t nc = game.num_candidates();
  if (supports.size() != nc) throw InputError("support assignment size mismatch");
  LinearSystem system;
  std::vector<std::map<size_t, size_t>> var(nc);
  for (size_t c = 0; c < nc; ++c) {
    if (supports[c].empty()) throw InputError("empty support");
    for (size_t i : supports[c]) {
      if (i >= game.num_issues()) throw InputError("support issue out of range");
      var[c][i] = system.AddVariable("w[" + game.candidates()[c] + "][" +
                                     game.IssueLabel(i) + "]");
    }
  }
  const size_t n = system.num_variables();
  for (size_t c = 0; c < nc; ++c) {
    RationalVector row(n, Rational(0));
    for (const auto& [i, v] : var[c]) row[v] = 1;
    system.AddEquality(std::move(row), game.budget(c));
  }
  system.AddNonNegativity();

  // focus(a) - focus(b) has the sign of
  //   Q*_b B^c + Q^c_a B* + W Q^c_a Q*_b - Q*_a B^c - Q^c_b B* - W Q^c_b Q*_a,
  // with B^c, B* linear in the rivals' variables (the B^c B* terms cancel).
  auto comparison = [&](size_t c, size_t a, size_t b) {
    RationalVector row(n, Rational(0));
    for (size_t d = 0; d < nc; ++d) {
      if (d == c) continue;
      for (const auto& [k, v] : var[d]) {
        row[v] = game.rank_sum(b) * game.rank(c, k) + game.rank(c, a) * game.rank_sum(k) -
                 game.rank_sum(a) * game.rank(c, k) - game.rank(c, b) * game.rank_sum(k);
      }
    }
    const Rational constant = game.budget(c) * (game.rank(c, a) * game.rank_sum(b) -
                                                game.rank(c, b) * game.rank_sum(a));
    return LinearRow{std::move(row), -constant};
  };

  for (size_t c = 0; c < nc; ++c) {
    if (sgn(game.budget(c)) == 0) continue;
    const size_t rep = *std::min_element(supports[c].begin(), supports[c].end());
    for (size_t i : supports[c]) {
      if (i == rep) continue;
      LinearRow row = comparison(c, i, rep);
      system.AddEquality(std::move(row.coeffs), std::move(row.rhs));
    }
    for (size_t j : game.active_issues()) {
      if (var[c].count(j)) continue;
      LinearRow row = comparison(c, rep, j);
      system.AddInequality(std::move(row.coeffs), std::move(row.rhs));
    }
  }
  return system;
}

namespace {

std::vector<std::vector<size_t>> NonemptySubsets(const std::vector<size_t>& items) {
  std::vector<std::vector<size_t>> out;
  const size_t n = items.size();
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    std::vector<size_t> subset;
    for (size_t k = 0; k < n; ++k) {
      if (mask >> k & 1) subset.push_back(items[k]);
    }
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Profile ProfileFromSolution(const AggregatedGame& game, const SupportAssignment& supports,
                            const RationalVector& point) {
  std::vector<Investment> invs;
  size_t v = 0;
  for (size_t c = 0; c < supports.size(); ++c) {
    Investment inv = Investment::Zero(game.num_issues());
    for (size_t i : supports[c]) inv[i] = point[v++];
    invs.push_back(std::move(inv));
  }
  return Profile(std::move(invs));
}

}  // namespace

EquilibriumCertificate NashFracGeneral(const AggregatedGame& game) {
  const size_t nc = game.num_candidates();
  const std::vector<size_t>& active = game.active_issues();
  if (active.empty()) {
    EquilibriumCertificate cert = VerifyEquilibrium(
        game, Profile(std::vector<Investment>(nc, Investment::Zero(game.num_issues()))),
        UtilityKind::Frac());
    cert.algorithm = "support-enumeration";
    return cert;
  }

  // A candidate without budget has a single strategy; one support suffices.
  const std::vector<std::vector<size_t>> all = NonemptySubsets(active);
  std::vector<std::vector<std::vector<size_t>>> options(nc);
  for (size_t c = 0; c < nc; ++c) {
    options[c] = sgn(game.budget(c)) == 0 ? std::vector<std::vector<size_t>>{{active[0]}}
                                          : all;
  }

  std::vector<std::vector<size_t>> tuples;  // indices into options[c]
  std::vector<size_t> cursor(nc, 0);
  while (true) {
    tuples.push_back(cursor);
    bool done = true;
    for (size_t c = nc; c-- > 0;) {
      if (++cursor[c] < options[c].size()) {
        done = false;
        break;
      }
      cursor[c] = 0;
    }
    if (done) break;
  }
  auto total_size = [&](const std::vector<size_t>& t) {
    size_t s = 0;
    for (size_t c = 0; c < nc; ++c) s += options[c][t[c]].size();
    return s;
  };
  std::stable_sort(tuples.begin(), tuples.end(),
                   [&](const auto& a, const auto& b) { return total_size(a) < total_size(b); });

  size_t tried = 0;
  for (const std::vector<size_t>& t : tuples) {
    ++tried;
    SupportAssignment supports(nc);
    for (size_t c = 0; c < nc; ++c) supports[c] = options[c][t[c]];
    FeasibilityResult solved = SolveFeasibility(BuildSupportSystem(game, supports));
    if (!solved.feasible) continue;
    Profile profile = ProfileFromSolution(game, supports, solved.point);
    EquilibriumCertificate cert = VerifyEquilibrium(game, profile, UtilityKind::Frac());
    if (!cert.valid()) {
      throw InvariantBreach("support system solution failed verification");
    }
    cert.supports = supports;
    cert.algorithm = "support-enumeration";
    cert.iterations = tried;
    return cert;
  }
  throw InvariantBreach("support enumeration exhausted without an equilibrium");
}

EquilibriumCertificate NashTwoCandidates(const AggregatedGame& game,
                                         const UtilityKind& kind) {
  if (game.num_candidates() != 2) {
    throw InputError("two-candidate algorithm needs exactly two candidates, got " +
                     std::to_string(game.num_candidates()));
  }
  kind.Validate(2);
  if (kind.tag() == UtilityKind::Tag::kInd) {
    std::vector<size_t> issues{DominantIssueInd2c(game, 0), DominantIssueInd2c(game, 1)};
    EquilibriumCertificate cert = VerifyEquilibrium(game, FocusedProfile(game, issues), kind);
    cert.algorithm = "dominant-strategies";
    cert.issue_trace = {{issues[0]}, {issues[1]}};
    return cert;
  }

  // Per candidate, issues in ascending own rank. Among issues of equal own
  // rank only the one with the smallest rival rank is kept: the others never
  // give a higher focused utility.
  std::vector<std::vector<size_t>> ladder(2);
  for (size_t c = 0; c < 2; ++c) {
    std::map<Rational, size_t> by_rank;
    for (size_t i : game.active_issues()) {
      auto [it, inserted] = by_rank.try_emplace(game.rank(c, i), i);
      if (!inserted && game.rival_rank(c, i) < game.rival_rank(c, it->second)) it->second = i;
    }
    for (const auto& [rank, i] : by_rank) ladder[c].push_back(i);
    if (ladder[c].empty()) ladder[c].push_back(kSlackIssue);
  }

  std::vector<size_t> pos{0, 0};
  EquilibriumCertificate trace;
  trace.issue_trace = {{ladder[0][0]}, {ladder[1][0]}};
  auto focus = [&](size_t c, size_t issue) {
    const size_t rival = 1 - c;
    const Investment opp =
        Investment::Focused(game.num_issues(), ladder[rival][pos[rival]], game.budget(rival));
    return FocusedUtility(game, c, issue, opp.amounts());
  };
  auto try_move = [&](size_t c) {
    const Rational current = focus(c, ladder[c][pos[c]]);
    for (size_t p = pos[c] + 1; p < ladder[c].size(); ++p) {
      if (focus(c, ladder[c][p]) > current) {
        pos[c] = p;
        trace.issue_trace[c].push_back(ladder[c][p]);
        return true;
      }
    }
    return false;
  };
  size_t iterations = 0;
  while (try_move(0) || try_move(1)) ++iterations;

  EquilibriumCertificate cert = VerifyEquilibrium(
      game, FocusedProfile(game, {ladder[0][pos[0]], ladder[1][pos[1]]}), kind);
  cert.algorithm = "two-candidate-ladder";
  cert.iterations = iterations;
  cert.issue_trace = std::move(trace.issue_trace);
  return cert;
}

EquilibriumCertificate BestResponseDynamics(const AggregatedGame& game,
                                            const UtilityKind& kind,
                                            std::optional<Profile> start,
                                            size_t max_rounds) {
  kind.Validate(game.num_candidates());
  Profile profile;
  if (start) {
    RequireValidProfile(game, *start);
    profile = *start;
  } else {
    profile = FocusedProfile(game, std::vector<size_t>(game.num_candidates(), FirstActive(game)));
  }
  std::map<Profile, size_t> seen;
  for (size_t round = 0; round < max_rounds; ++round) {
    auto [it, fresh] = seen.try_emplace(profile, round);
    if (!fresh) {
      EquilibriumCertificate cert;
      cert.kind = kind;
      cert.profile = profile;
      cert.utilities = Utility(game, profile, kind);
      cert.algorithm = "best-response-dynamics";
      cert.iterations = round;
      cert.note = "cycle of length " + std::to_string(round - it->second) +
                  " entered at round " + std::to_string(it->second);
      return cert;
    }
    bool moved = false;
    for (size_t c = 0; c < game.num_candidates(); ++c) {
      const RationalVector opp = profile.TotalExcluding(c);
      const Rational current = Utility(game, profile, kind)[c];
      BestResponseReport br = BestResponse(game, c, opp, kind, kVerifyEpsilon);
      if (PayoffsAgainst(game, c, opp, br.witness, kind)[c] > current) {
        profile = profile.With(c, br.witness);
        moved = true;
      }
    }
    if (!moved) {
      EquilibriumCertificate cert = VerifyEquilibrium(game, profile, kind);
      cert.algorithm = "best-response-dynamics";
      cert.iterations = round + 1;
      if (!cert.valid()) {
        // Only reachable for Plus, where no witness beats the current
        // profile yet the supremum does.
        cert.status = CertificateStatus::kUnknown;
        cert.note = "stalled below an unattained supremum";
      }
      return cert;
    }
  }
  EquilibriumCertificate cert;
  cert.kind = kind;
  cert.profile = profile;
  cert.utilities = Utility(game, profile, kind);
  cert.algorithm = "best-response-dynamics";
  cert.iterations = max_rounds;
  cert.note = "round limit reached";
  return cert;
}

EquilibriumCertificate EquilibriumSearchInd(const AggregatedGame& game,
                                            size_t max_rounds,
                                            std::optional<Profile> start) {
  return BestResponseDynamics(game, UtilityKind::Ind(), std::move(start), max_rounds);
}

}  // namespace priming
