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

#ifndef PRIMING_MODEL_H_
#define PRIMING_MODEL_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "priming/rational.h"

namespace priming {

// Index of the synthetic slack issue in every aggregated game.
inline constexpr size_t kSlackIssue = 0;

// One voter's view of the race. Indexed [candidate][user issue] and
// [user issue]; the slack issue never appears at this level.
struct VoterRecord {
  std::vector<RationalVector> quality;
  RationalVector salience0;
};

// Voter-level election data as supplied by the user.
struct ElectionInstance {
  std::vector<std::string> candidates;
  std::vector<std::string> issues;
  RationalVector elasticities;
  RationalVector budgets;
  std::vector<VoterRecord> voters;
};

struct Violation {
  std::string rule;
  std::string message;
  std::optional<size_t> voter = std::nullopt;
  std::optional<size_t> candidate = std::nullopt;
  std::optional<size_t> issue = std::nullopt;
};

// Every violated instance invariant, with coordinates. Empty iff valid.
std::vector<Violation> ValidateInstance(const ElectionInstance& instance);

// A single candidate's budget allocation over all issues of a game, slack
// issue first. Validity against a game is checked by ValidateInvestment.
class Investment {
 public:
  Investment() = default;
  explicit Investment(RationalVector amounts) : amounts_(std::move(amounts)) {}

  // Entire budget on `issue`.
  static Investment Focused(size_t num_issues, size_t issue,
                            const Rational& budget);
  static Investment Zero(size_t num_issues);

  size_t size() const { return amounts_.size(); }
  const Rational& operator[](size_t i) const { return amounts_[i]; }
  Rational& operator[](size_t i) { return amounts_[i]; }
  const RationalVector& amounts() const { return amounts_; }
  Rational Total() const { return Sum(amounts_); }

  // Issues with strictly positive spend, ascending.
  std::vector<size_t> Support() const;

  friend bool operator==(const Investment&, const Investment&) = default;
  friend auto operator<=>(const Investment& a, const Investment& b) {
    return a.amounts_ <=> b.amounts_;
  }

 private:
  RationalVector amounts_;
};

// One investment per candidate.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<Investment> investments)
      : investments_(std::move(investments)) {}

  size_t size() const { return investments_.size(); }
  const Investment& operator[](size_t c) const { return investments_[c]; }
  const std::vector<Investment>& investments() const { return investments_; }

  // Copy with candidate c's investment replaced.
  Profile With(size_t c, Investment investment) const;

  // w = sum over candidates, per issue.
  RationalVector Total() const;
  // w^{-c}.
  RationalVector TotalExcluding(size_t c) const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) {
    return a.investments_ <=> b.investments_;
  }

 private:
  std::vector<Investment> investments_;
};

// Aggregated rank representation: Q^c_i for every candidate and issue, issue
// 0 being the slack issue. Immutable once built.
class AggregatedGame {
 public:
  // Validates shapes and signs; throws InputError. `issue_names` lists user
  // issues only; `ranks[c]` includes the slack rank first.
  AggregatedGame(std::vector<std::string> candidates,
                 std::vector<std::string> issue_names,
                 std::vector<RationalVector> ranks, RationalVector budgets);

  size_t num_candidates() const { return candidates_.size(); }
  // Including the slack issue.
  size_t num_issues() const { return rank_sums_.size(); }

  const std::vector<std::string>& candidates() const { return candidates_; }
  // User issue names (without the slack issue).
  const std::vector<std::string>& issue_names() const { return issue_names_; }
  std::string IssueLabel(size_t issue) const;

  const Rational& rank(size_t c, size_t i) const { return ranks_[c][i]; }
  const RationalVector& ranks(size_t c) const { return ranks_[c]; }
  const Rational& rank_sum(size_t i) const { return rank_sums_[i]; }
  const RationalVector& rank_sums() const { return rank_sums_; }
  // Q^{-c}_i = Q*_i - Q^c_i.
  Rational rival_rank(size_t c, size_t i) const {
    return rank_sums_[i] - ranks_[c][i];
  }
  const Rational& budget(size_t c) const { return budgets_[c]; }
  const RationalVector& budgets() const { return budgets_; }
  const Rational& total_budget() const { return total_budget_; }

  // An issue is active when it carries votes (Q*_i > 0). Inert issues are not
  // strategy options; spending on them is rejected by ValidateInvestment.
  bool is_active(size_t i) const { return sgn(rank_sums_[i]) > 0; }
  const std::vector<size_t>& active_issues() const { return active_issues_; }

  friend bool operator==(const AggregatedGame&, const AggregatedGame&) = default;

 private:
  std::vector<std::string> candidates_;
  std::vector<std::string> issue_names_;
  std::vector<RationalVector> ranks_;
  RationalVector budgets_;
  Rational total_budget_;
  RationalVector rank_sums_;
  std::vector<size_t> active_issues_;
};

// Reduces a voter-level instance to ranks:
//   Q^c_0 = Bbar^c / W*,  Q^c_i = Bbar^c / W* + rho_i * sum_v q^v_i(c),
// where Bbar^c = sum_v sum_i q^v_i(c) s^v_i(0). Throws InputError on an
// invalid instance, W* = 0, or Bbar* = 0.
AggregatedGame Aggregate(const ElectionInstance& instance);

// Bbar^c per candidate.
RationalVector BiasTerms(const ElectionInstance& instance);

// Empty optional when `investment` is a full-budget allocation for c.
std::optional<std::string> ValidateInvestment(const AggregatedGame& game,
                                              size_t c,
                                              const Investment& investment);
std::optional<std::string> ValidateProfile(const AggregatedGame& game,
                                           const Profile& profile);
// Throwing variant of ValidateProfile.
void RequireValidProfile(const AggregatedGame& game, const Profile& profile);

struct VoterShares {
  RationalVector votes;   // p(c, w)
  RationalVector shares;  // r(c, w)
};

// Reference evaluation straight from voter records. `profile` entries are
// indexed like aggregated investments (slack first) but slack spend is
// ignored and unspent budget is allowed. Throws InputError when no votes are
// cast.
VoterShares PerVoterShare(const ElectionInstance& instance,
                          const Profile& profile);

// p^v(c, w) for one voter; exposed for the probability-structure property.
RationalVector VoterVoteProbabilities(const ElectionInstance& instance,
                                      size_t voter, const Profile& profile);

// Moves each candidate's unspent budget onto the slack issue.
Profile CompleteWithSlack(const AggregatedGame& game, const Profile& profile);

}  // namespace priming

#endif  // PRIMING_MODEL_H_
