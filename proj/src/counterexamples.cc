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

#include "priming/counterexamples.h"

#include <algorithm>

#include "priming/engine.h"
#include "priming/equilibrium.h"
#include "priming/oracle.h"
#include "priming/response.h"

namespace priming {
namespace {

AggregatedGame Compact(std::vector<RationalVector> user_ranks, RationalVector budgets) {
  std::vector<std::string> candidates;
  std::vector<RationalVector> ranks;
  for (size_t c = 0; c < user_ranks.size(); ++c) {
    candidates.push_back("c" + std::to_string(c + 1));
    RationalVector row{Rational(0)};
    row.insert(row.end(), user_ranks[c].begin(), user_ranks[c].end());
    ranks.push_back(std::move(row));
  }
  std::vector<std::string> issues;
  for (size_t i = 0; i < user_ranks.front().size(); ++i) issues.push_back(std::to_string(i + 1));
  return AggregatedGame(std::move(candidates), std::move(issues), std::move(ranks),
                        std::move(budgets));
}

Rational R(long p, long q = 1) { return Rational(p, q); }

ScriptedCheck Check(std::string description, bool passed, std::string detail = "") {
  return {std::move(description), passed, std::move(detail)};
}

std::string Show(const Investment& inv) {
  std::string out = "(";
  for (size_t i = 0; i < inv.size(); ++i) out += (i ? ", " : "") + ToString(inv[i]);
  return out + ")";
}

CounterexampleResult RunSplit() {
  const AggregatedGame game = SplitGame();
  const RationalVector none(game.num_issues(), Rational(0));
  const Investment half(RationalVector{0, R(1, 2), R(1, 2)});
  CounterexampleResult out{"split", {}};

  BestResponseReport br = BestResponseInd(game, 0, none);
  out.checks.push_back(Check("best_response_ind(c1) = (1/2, 1/2) with value 1/3",
                             br.witness == half && br.value == R(1, 3),
                             "witness " + Show(br.witness) + ", value " + ToString(br.value)));

  const UtilityKind ind = UtilityKind::Ind();
  for (size_t k : {size_t{2}, size_t{20}}) {
    bool only_half = true;
    for (const Investment& inv : CandidateGrid(game, 0, k)) {
      const Rational u = PayoffsAgainst(game, 0, none, inv, ind)[0];
      if (sgn(u) > 0 && inv != half) only_half = false;
      if (inv == half && u != R(1, 3)) only_half = false;
    }
    out.checks.push_back(Check("k = " + std::to_string(k) +
                                   " grid: only (1/2, 1/2) gives c1 a positive u_ind",
                               only_half));
  }
  return out;
}

CounterexampleResult RunPlus() {
  const AggregatedGame game = PlusGame();
  const RationalVector none(game.num_issues(), Rational(0));
  const Rational v = 4;
  const Rational eps(1, 1000);
  const Rational supremum = v + R(20, 49);
  const UtilityKind plus = UtilityKind::Plus(v);
  CounterexampleResult out{"plus", {}};

  BestResponseReport br = BestResponsePlus(game, 0, none, v, eps);
  out.checks.push_back(Check("best_response_plus(c1, V = 4) is not attained",
                             !br.attained, br.detail));
  out.checks.push_back(Check("supremum is exactly 4 + 20/49", br.value == supremum,
                             "reported " + ToString(br.value)));
  const Rational at_witness = PayoffsAgainst(game, 0, none, br.witness, plus)[0];
  out.checks.push_back(Check("witness is within epsilon and wins alone",
                             at_witness >= supremum - eps && at_witness < supremum &&
                                 br.witness[1] < R(1, 2),
                             "u_plus(witness) = " + ToString(at_witness)));

  GridBestResponse grid = BruteForceBestResponse(game, 0, none, plus, 50);
  out.checks.push_back(Check("k = 50 grid optimum lies strictly below the supremum, at x = 12/25",
                             grid.value < supremum && grid.witness[1] == R(12, 25),
                             "grid value " + ToString(grid.value)));

  bool increasing = true;
  Rational last = -1;
  for (const Investment& inv : CandidateGrid(game, 0, 50)) {
    // Grid order is ascending in the issue-1 amount.
    const Rational r = PayoffsAgainst(game, 0, none, inv, UtilityKind::Frac())[0];
    if (r <= last) increasing = false;
    last = r;
  }
  out.checks.push_back(Check("c1's share is strictly increasing in its issue-1 spend",
                             increasing));
  return out;
}

// True when, for candidate c, the sign of focus(better) - focus(worse) is
// positive at every vertex of the opponents' strategy space. The sign is
// affine in the opponents' spend, so vertices suffice.
bool StrictlyPrefersEverywhere(const AggregatedGame& game, size_t c, size_t better,
                               size_t worse) {
  std::vector<size_t> spenders;
  for (size_t d = 0; d < game.num_candidates(); ++d) {
    if (d != c && sgn(game.budget(d)) > 0) spenders.push_back(d);
  }
  const std::vector<size_t>& active = game.active_issues();
  std::vector<size_t> cursor(spenders.size(), 0);
  while (true) {
    RationalVector opp(game.num_issues(), Rational(0));
    for (size_t k = 0; k < spenders.size(); ++k) {
      opp[active[cursor[k]]] += game.budget(spenders[k]);
    }
    if (!(FocusedUtility(game, c, better, opp) > FocusedUtility(game, c, worse, opp))) {
      return false;
    }
    size_t k = 0;
    for (; k < cursor.size(); ++k) {
      if (++cursor[k] < active.size()) break;
      cursor[k] = 0;
    }
    if (k == cursor.size()) return true;
  }
}

CounterexampleResult RunMax() {
  const AggregatedGame game = MaxGame();
  const UtilityKind max = UtilityKind::Max(4);
  CounterexampleResult out{"max", {}};
  for (size_t c : {size_t{0}, size_t{1}}) {
    out.checks.push_back(Check("issue 2 strictly frac-dominates issue 1 for " +
                                   game.candidates()[c],
                               StrictlyPrefersEverywhere(game, c, 2, 1)));
  }
  std::vector<Profile> eq = BruteForceEpsilonEquilibria(game, max, 10, 0);
  out.checks.push_back(Check("no pure grid equilibrium at k = 10 under u_max(V = 4)",
                             eq.empty(), std::to_string(eq.size()) + " stable profiles"));
  EquilibriumCertificate dyn = BestResponseDynamics(game, max, std::nullopt, 100);
  out.checks.push_back(Check("best-response dynamics under u_max cycle",
                             dyn.status == CertificateStatus::kUnknown &&
                                 dyn.note.rfind("cycle", 0) == 0,
                             dyn.note));
  return out;
}

CounterexampleResult RunUnnatural() {
  const AggregatedGame game = UnnaturalGame();
  CounterexampleResult out{"unnatural", {}};
  std::vector<Investment> all_in;
  for (size_t c = 0; c < 3; ++c) all_in.push_back(Investment::Focused(game.num_issues(), 1, 1));
  const Profile profile(all_in);
  EquilibriumCertificate cert = VerifyEquilibrium(game, profile, UtilityKind::Ind());
  out.checks.push_back(Check("everyone all-in on issue 1 is a u_ind equilibrium",
                             cert.valid(), ToString(cert.status)));
  for (size_t c : {size_t{1}, size_t{2}}) {
    BestResponseReport frac = BestResponseFrac(game, c, profile.TotalExcluding(c));
    const Rational share = VoteShare(game, profile)[c];
    out.checks.push_back(Check(game.candidates()[c] + " plays against its share interest",
                               frac.witness != profile[c] && frac.value > share,
                               "share " + ToString(share) + ", frac optimum " +
                                   ToString(frac.value)));
  }
  return out;
}

}  // namespace

AggregatedGame SplitGame() {
  return Compact({{1, 1}, {2, 0}, {0, 2}}, {1, 0, 0});
}

AggregatedGame PlusGame() {
  return Compact({{10, 10}, {0, 9}, {11, 9}}, {1, 0, 0});
}

AggregatedGame MaxGame(const Rational& e) {
  return Compact({{1, 1}, {1, 1 - e}, {1 - e, 1 + e}, {1, 0}}, {1, 1, 0, 0});
}

AggregatedGame UnnaturalGame() {
  return Compact({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {1, 1, 1});
}

bool CounterexampleResult::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ScriptedCheck& c) { return c.passed; });
}

const std::vector<std::string>& CounterexampleNames() {
  static const std::vector<std::string> names{"split", "plus", "max", "unnatural"};
  return names;
}

CounterexampleResult RunCounterexample(const std::string& name) {
  if (name == "split") return RunSplit();
  if (name == "plus") return RunPlus();
  if (name == "max") return RunMax();
  if (name == "unnatural") return RunUnnatural();
  throw InputError("unknown counterexample \"" + name +
                   "\" (expected split, plus, max, unnatural or all)");
}

}  // namespace priming
