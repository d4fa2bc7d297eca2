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

#include "priming/response.h"

#include <algorithm>
#include <optional>

#include "priming/feasibility.h"

namespace priming {

PayoffVector PayoffsAgainst(const AggregatedGame& game, size_t responder,
                            std::span<const Rational> opponents,
                            const Investment& investment,
                            const UtilityKind& kind) {
  if (responder >= game.num_candidates() || investment.size() != opponents.size()) {
    throw InputError("responder or investment does not match the game");
  }
  RationalVector total(opponents.begin(), opponents.end());
  for (size_t i = 0; i < total.size(); ++i) total[i] += investment[i];
  RationalVector votes(game.num_candidates());
  for (size_t d = 0; d < votes.size(); ++d) votes[d] = Dot(game.ranks(d), total);
  return PayoffFromVotes(votes, kind);
}

namespace {

void RequireOpponents(const AggregatedGame& game, size_t c,
                      std::span<const Rational> opponents) {
  if (c >= game.num_candidates()) {
    throw InputError("responder index " + std::to_string(c) + " out of range");
  }
  if (opponents.size() != game.num_issues()) {
    throw InputError("opponent investment has " + std::to_string(opponents.size()) +
                     " entries, expected " + std::to_string(game.num_issues()));
  }
  for (const Rational& w : opponents) {
    if (sgn(w) < 0) throw InputError("opponent investment is negative");
  }
}

// c's own budget simplex over the active issues, one LP variable per issue.
class ResponseSpace {
 public:
  ResponseSpace(const AggregatedGame& game, size_t c,
                std::span<const Rational> opponents)
      : game_(game), c_(c), opponents_(opponents.begin(), opponents.end()),
        issues_(game.active_issues()) {}

  const std::vector<size_t>& issues() const { return issues_; }
  bool trivial() const { return issues_.empty() || sgn(game_.budget(c_)) == 0; }

  LinearSystem Simplex() const {
    LinearSystem system;
    for (size_t i : issues_) system.AddVariable("w_" + game_.IssueLabel(i));
    system.AddEquality(RationalVector(issues_.size(), Rational(1)), game_.budget(c_));
    system.AddNonNegativity();
    return system;
  }

  // margin_d(x) = p(c) - p(d) as an affine function of c's spend.
  AffineForm Margin(size_t d) const {
    AffineForm form;
    for (size_t i : issues_) form.coeffs.push_back(game_.rank(c_, i) - game_.rank(d, i));
    for (size_t i = 0; i < opponents_.size(); ++i) {
      form.constant += (game_.rank(c_, i) - game_.rank(d, i)) * opponents_[i];
    }
    return form;
  }

  FractionalObjective Share() const {
    FractionalObjective obj;
    for (size_t i : issues_) {
      obj.numerator.coeffs.push_back(game_.rank(c_, i));
      obj.denominator.coeffs.push_back(game_.rank_sum(i));
    }
    obj.numerator.constant = Dot(game_.ranks(c_), opponents_);
    obj.denominator.constant = Dot(game_.rank_sums(), opponents_);
    return obj;
  }

  Investment Embed(std::span<const Rational> point) const {
    Investment inv = Investment::Zero(game_.num_issues());
    for (size_t k = 0; k < issues_.size(); ++k) inv[issues_[k]] = point[k];
    return inv;
  }

  Rational Evaluate(const Investment& inv, const UtilityKind& kind) const {
    return PayoffsAgainst(game_, c_, opponents_, inv, kind)[c_];
  }

  std::vector<size_t> Rivals() const {
    std::vector<size_t> out;
    for (size_t d = 0; d < game_.num_candidates(); ++d) {
      if (d != c_) out.push_back(d);
    }
    return out;
  }

 private:
  const AggregatedGame& game_;
  size_t c_;
  RationalVector opponents_;
  std::vector<size_t> issues_;
};

void AddGe(LinearSystem& s, const AffineForm& f) { s.AddInequality(f.coeffs, -f.constant); }
void AddGt(LinearSystem& s, const AffineForm& f) { s.AddStrict(f.coeffs, -f.constant); }
void AddEq(LinearSystem& s, const AffineForm& f) { s.AddEquality(f.coeffs, -f.constant); }
void AddLt(LinearSystem& s, const AffineForm& f) {
  RationalVector neg = f.coeffs;
  for (Rational& x : neg) x = -x;
  s.AddStrict(std::move(neg), f.constant);
}

// Same region with every strict row relaxed to a weak one.
LinearSystem Closure(LinearSystem system) {
  for (LinearRow& row : system.strict) system.inequalities.push_back(std::move(row));
  system.strict.clear();
  return system;
}

// Nonempty subsets of `items`, by size and then lexicographically.
std::vector<std::vector<size_t>> SubsetsBySize(const std::vector<size_t>& items) {
  std::vector<std::vector<size_t>> out;
  const size_t n = items.size();
  for (size_t size = 1; size <= n; ++size) {
    std::vector<size_t> pick(size);
    for (size_t k = 0; k < size; ++k) pick[k] = k;
    while (true) {
      std::vector<size_t> subset;
      for (size_t k : pick) subset.push_back(items[k]);
      out.push_back(std::move(subset));
      size_t k = size;
      while (k > 0 && pick[k - 1] == n - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (size_t m = k; m < size; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return out;
}

std::string NameList(const AggregatedGame& game, const std::vector<size_t>& cands) {
  std::string out = "{";
  for (size_t k = 0; k < cands.size(); ++k) {
    if (k) out += ", ";
    out += game.candidates()[cands[k]];
  }
  return out + "}";
}

BestResponseReport TrivialReport(const AggregatedGame& game, size_t c,
                                 std::span<const Rational> opponents,
                                 const UtilityKind& kind) {
  BestResponseReport report;
  report.kind = kind;
  report.responder = c;
  report.witness = Investment::Zero(game.num_issues());
  report.value = PayoffsAgainst(game, c, opponents, report.witness, kind)[c];
  report.detail = "no budget to allocate";
  return report;
}

}  // namespace

BestResponseReport BestResponseFrac(const AggregatedGame& game, size_t c,
                                    std::span<const Rational> opponents) {
  RequireOpponents(game, c, opponents);
  BestResponseReport report;
  report.responder = c;
  report.kind = UtilityKind::Frac();
  if (game.active_issues().empty()) return TrivialReport(game, c, opponents, report.kind);
  std::optional<Rational> best;
  for (size_t i : game.active_issues()) {
    Rational value = FocusedUtility(game, c, i, opponents);
    if (!best || value > *best) {
      best = value;
      report.optimal_issues.assign(1, i);
    } else if (value == *best) {
      report.optimal_issues.push_back(i);
    }
  }
  report.value = *best;
  report.witness = Investment::Focused(game.num_issues(), report.optimal_issues.front(),
                                       game.budget(c));
  report.detail = "focused on issue " + game.IssueLabel(report.optimal_issues.front());
  return report;
}

size_t DominantIssueInd2c(const AggregatedGame& game, size_t c) {
  if (game.num_candidates() != 2) {
    throw InputError("dominant-strategy rule needs exactly two candidates, got " +
                     std::to_string(game.num_candidates()));
  }
  if (c > 1) throw InputError("candidate index out of range");
  const size_t rival = 1 - c;
  std::optional<size_t> best;
  Rational best_diff;
  for (size_t i : game.active_issues()) {
    Rational diff = game.rank(c, i) - game.rank(rival, i);
    if (!best || diff > best_diff) {
      best = i;
      best_diff = std::move(diff);
    }
  }
  return best.value_or(kSlackIssue);
}

BestResponseReport BestResponseInd(const AggregatedGame& game, size_t c,
                                   std::span<const Rational> opponents) {
  RequireOpponents(game, c, opponents);
  const UtilityKind kind = UtilityKind::Ind();
  ResponseSpace space(game, c, opponents);
  if (space.trivial()) return TrivialReport(game, c, opponents, kind);
  BestResponseReport report;
  report.kind = kind;
  report.responder = c;
  const std::vector<size_t> rivals = space.Rivals();
  if (rivals.empty()) {
    report.value = 1;
    report.witness = BestResponseFrac(game, c, opponents).witness;
    report.detail = "sole candidate";
    return report;
  }

  // Stage 1: max t subject to margin_d(x) >= t.
  LinearSystem lp = space.Simplex();
  const size_t t = lp.AddVariable("t");
  for (size_t d : rivals) {
    AffineForm m = space.Margin(d);
    m.coeffs.push_back(-1);
    AddGe(lp, m);
  }
  RationalVector objective(lp.num_variables(), Rational(0));
  objective[t] = 1;
  OptimizationResult best = MaximizeLinear(AffineForm{objective, 0}, lp);
  if (best.status != OptimizationStatus::kOptimal) {
    throw InvariantBreach("worst-margin LP is " + ToString(best.status));
  }
  if (sgn(best.value) > 0) {
    report.value = 1;
    report.witness = space.Embed(std::span(best.point).first(space.issues().size()));
    report.detail = "wins alone (worst margin " + ToString(best.value) + ")";
    return report;
  }
  if (sgn(best.value) < 0) {
    BestResponseReport frac = BestResponseFrac(game, c, opponents);
    report.value = 0;
    report.witness = frac.witness;
    report.detail = "cannot win or tie; frac-optimal witness";
    return report;
  }

  // Stage 2: smallest tie set S with strict separation from the rest.
  for (const std::vector<size_t>& tie : SubsetsBySize(rivals)) {
    LinearSystem region = space.Simplex();
    for (size_t d : rivals) {
      if (std::find(tie.begin(), tie.end(), d) != tie.end()) {
        AddEq(region, space.Margin(d));
      } else {
        AddGt(region, space.Margin(d));
      }
    }
    StrictPointResult point = FindStrictPoint(region);
    if (!point.strict_feasible) continue;
    report.value = Rational(1, tie.size() + 1);
    report.witness = space.Embed(point.point);
    report.detail = "ties with " + NameList(game, tie);
    return report;
  }
  throw InvariantBreach("worst margin is zero but no tie set is realizable");
}

BestResponseReport BestResponseMax(const AggregatedGame& game, size_t c,
                                   std::span<const Rational> opponents,
                                   const Rational& victory_weight) {
  const UtilityKind kind = UtilityKind::Max(victory_weight);
  kind.Validate(game.num_candidates());
  BestResponseReport ind = BestResponseInd(game, c, opponents);
  BestResponseReport report;
  if (sgn(ind.value) > 0) {
    report = ind;
    report.value = victory_weight * ind.value;
    report.detail = "victory branch: " + ind.detail;
  } else {
    report = BestResponseFrac(game, c, opponents);
    report.detail = "share branch: " + report.detail;
  }
  report.kind = kind;
  return report;
}

namespace {

struct VictoryStatus {
  std::string label;
  Rational victory;
  LinearSystem region;
};

std::vector<VictoryStatus> EnumerateStatuses(const AggregatedGame& game,
                                             const ResponseSpace& space) {
  const std::vector<size_t> rivals = space.Rivals();
  std::vector<VictoryStatus> out;

  VictoryStatus alone{"win alone", 1, space.Simplex()};
  for (size_t d : rivals) AddGt(alone.region, space.Margin(d));
  out.push_back(std::move(alone));

  // Lexicographic order of the sorted rival lists.
  std::vector<std::vector<size_t>> ties = SubsetsBySize(rivals);
  std::sort(ties.begin(), ties.end());
  for (const std::vector<size_t>& tie : ties) {
    VictoryStatus status{"tie with " + NameList(game, tie),
                         Rational(1, tie.size() + 1), space.Simplex()};
    for (size_t d : rivals) {
      if (std::find(tie.begin(), tie.end(), d) != tie.end()) {
        AddEq(status.region, space.Margin(d));
      } else {
        AddGt(status.region, space.Margin(d));
      }
    }
    out.push_back(std::move(status));
  }

  for (size_t d : rivals) {
    VictoryStatus lose{"lose to " + game.candidates()[d], 0, space.Simplex()};
    AddLt(lose.region, space.Margin(d));
    out.push_back(std::move(lose));
  }
  return out;
}

struct StatusOptimum {
  size_t status;
  Rational value;  // V * victory + r*
  bool attained;
  RationalVector closure_point;
  RationalVector attaining_point;  // when attained
  RationalVector interior_point;
};

}  // namespace

BestResponseReport BestResponsePlus(const AggregatedGame& game, size_t c,
                                    std::span<const Rational> opponents,
                                    const Rational& victory_weight,
                                    const Rational& epsilon) {
  if (sgn(epsilon) <= 0) throw InputError("epsilon must be positive");
  RequireOpponents(game, c, opponents);
  const UtilityKind kind = UtilityKind::Plus(victory_weight);
  kind.Validate(game.num_candidates());
  ResponseSpace space(game, c, opponents);
  if (space.trivial()) return TrivialReport(game, c, opponents, kind);

  const FractionalObjective share = space.Share();
  const std::vector<VictoryStatus> statuses = EnumerateStatuses(game, space);
  std::optional<StatusOptimum> best;
  for (size_t s = 0; s < statuses.size(); ++s) {
    const LinearSystem& region = statuses[s].region;
    StrictPointResult interior = FindStrictPoint(region);
    if (!interior.strict_feasible) continue;
    OptimizationResult closure = MaximizeLinearFractional(share, Closure(region));
    if (closure.status != OptimizationStatus::kOptimal) {
      throw InvariantBreach("share maximization over a status closure is " +
                            ToString(closure.status));
    }
    StatusOptimum candidate{s, victory_weight * statuses[s].victory + closure.value, false,
                            closure.point, {}, interior.point};
    // Attained iff the optimal level set meets the open region.
    LinearSystem level = region;
    AffineForm gap = share.numerator;
    for (size_t k = 0; k < gap.coeffs.size(); ++k) {
      gap.coeffs[k] -= closure.value * share.denominator.coeffs[k];
    }
    gap.constant -= closure.value * share.denominator.constant;
    AddGe(level, gap);
    StrictPointResult hit = FindStrictPoint(level);
    if (hit.strict_feasible) {
      candidate.attained = true;
      candidate.attaining_point = hit.point;
    }
    if (!best || candidate.value > best->value ||
        (candidate.value == best->value && candidate.attained && !best->attained)) {
      best = std::move(candidate);
    }
  }
  if (!best) throw InvariantBreach("no victory status is realizable");

  BestResponseReport report;
  report.kind = kind;
  report.responder = c;
  report.value = best->value;
  const std::string& label = statuses[best->status].label;
  if (best->attained) {
    report.attained = true;
    report.witness = space.Embed(best->attaining_point);
    report.detail = label + ": optimum attained";
    return report;
  }
  report.attained = false;
  report.detail = label + " region open: supremum not attained";
  // Walk from the closure optimizer toward the interior point.
  Rational delta(1, 2);
  for (int step = 0;; ++step) {
    if (step > 4096) throw InvariantBreach("epsilon witness search did not converge");
    RationalVector x = best->closure_point;
    for (size_t k = 0; k < x.size(); ++k) {
      x[k] += delta * (best->interior_point[k] - best->closure_point[k]);
    }
    Investment candidate = space.Embed(x);
    if (space.Evaluate(candidate, kind) >= report.value - epsilon) {
      report.witness = std::move(candidate);
      return report;
    }
    delta /= 2;
  }
}

BestResponseReport BestResponse(const AggregatedGame& game, size_t c,
                                std::span<const Rational> opponents,
                                const UtilityKind& kind,
                                const Rational& epsilon) {
  switch (kind.tag()) {
    case UtilityKind::Tag::kFrac: return BestResponseFrac(game, c, opponents);
    case UtilityKind::Tag::kInd: return BestResponseInd(game, c, opponents);
    case UtilityKind::Tag::kMax:
      return BestResponseMax(game, c, opponents, kind.victory_weight());
    case UtilityKind::Tag::kPlus:
      return BestResponsePlus(game, c, opponents, kind.victory_weight(), epsilon);
  }
  throw InvariantBreach("unhandled utility kind");
}

}  // namespace priming
