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

#include "priming/model.h"

#include <set>

namespace priming {
namespace {

std::string Coord(std::string_view name, size_t index) {
  return std::string(name) + " " + std::to_string(index);
}

void CheckNames(const std::vector<std::string>& names, std::string_view what,
                std::vector<Violation>& out) {
  std::set<std::string> seen;
  for (const std::string& n : names) {
    if (n.empty()) {
      out.push_back({"empty-name", std::string(what) + " name is empty"});
    } else if (!seen.insert(n).second) {
      out.push_back({"duplicate-name",
                     "duplicate " + std::string(what) + " name \"" + n + "\""});
    }
  }
}

}  // namespace

std::vector<Violation> ValidateInstance(const ElectionInstance& instance) {
  std::vector<Violation> out;
  const size_t nc = instance.candidates.size();
  const size_t ni = instance.issues.size();
  if (nc == 0) out.push_back({"no-candidates", "at least one candidate required"});
  if (ni == 0) out.push_back({"no-issues", "at least one issue required"});
  CheckNames(instance.candidates, "candidate", out);
  CheckNames(instance.issues, "issue", out);

  if (instance.elasticities.size() != ni) {
    out.push_back({"shape", "rho has " + std::to_string(instance.elasticities.size()) +
                                " entries, expected " + std::to_string(ni)});
  } else {
    for (size_t i = 0; i < ni; ++i) {
      if (sgn(instance.elasticities[i]) < 0) {
        out.push_back({"negative-elasticity", "rho is negative for " + Coord("issue", i),
                       std::nullopt, std::nullopt, i});
      }
    }
  }

  Rational total_budget = 0;
  if (instance.budgets.size() != nc) {
    out.push_back({"shape", "budgets has " + std::to_string(instance.budgets.size()) +
                                " entries, expected " + std::to_string(nc)});
  } else {
    for (size_t c = 0; c < nc; ++c) {
      if (sgn(instance.budgets[c]) < 0) {
        out.push_back({"negative-budget", "budget is negative for " + Coord("candidate", c),
                       std::nullopt, c});
      }
      total_budget += instance.budgets[c];
    }
    if (nc > 0 && sgn(total_budget) <= 0) {
      out.push_back({"zero-total-budget", "total budget W* must be positive"});
    }
  }

  Rational bias_total = 0;
  bool shapes_ok = true;
  for (size_t v = 0; v < instance.voters.size(); ++v) {
    const VoterRecord& voter = instance.voters[v];
    if (voter.quality.size() != nc) {
      out.push_back({"shape", "quality has " + std::to_string(voter.quality.size()) +
                                  " candidates, expected " + std::to_string(nc),
                     v});
      shapes_ok = false;
      continue;
    }
    if (voter.salience0.size() != ni) {
      out.push_back({"shape", "salience0 has " + std::to_string(voter.salience0.size()) +
                                  " entries, expected " + std::to_string(ni),
                     v});
      shapes_ok = false;
      continue;
    }
    bool row_ok = true;
    for (size_t c = 0; c < nc; ++c) {
      if (voter.quality[c].size() != ni) {
        out.push_back({"shape", "quality row has " + std::to_string(voter.quality[c].size()) +
                                    " issues, expected " + std::to_string(ni),
                       v, c});
        row_ok = false;
      }
    }
    if (!row_ok) {
      shapes_ok = false;
      continue;
    }
    for (size_t i = 0; i < ni; ++i) {
      Rational column = 0;
      for (size_t c = 0; c < nc; ++c) {
        const Rational& q = voter.quality[c][i];
        if (sgn(q) < 0) {
          out.push_back({"negative-quality", "quality score is negative", v, c, i});
        }
        column += q;
      }
      if (column > 1) {
        out.push_back({"quality-sum", "quality sum > 1 (" + ToString(column) + ")",
                       v, std::nullopt, i});
      }
    }
    Rational salience_sum = 0;
    for (size_t i = 0; i < ni; ++i) {
      if (sgn(voter.salience0[i]) < 0) {
        out.push_back({"negative-salience", "initial salience is negative", v,
                       std::nullopt, i});
      }
      salience_sum += voter.salience0[i];
    }
    if (salience_sum != 1) {
      out.push_back({"salience-sum",
                     "salience sum != 1 (" + ToString(salience_sum) + ")", v});
    }
    for (size_t c = 0; c < nc; ++c) {
      bias_total += Dot(voter.quality[c], voter.salience0);
    }
  }
  if (shapes_ok && nc > 0 && ni > 0 && sgn(bias_total) <= 0) {
    out.push_back({"degenerate-electorate",
                   "sum over candidates, voters and issues of q * s(0) must be positive"});
  }
  return out;
}

Investment Investment::Focused(size_t num_issues, size_t issue,
                               const Rational& budget) {
  RationalVector amounts(num_issues, Rational(0));
  amounts.at(issue) = budget;
  return Investment(std::move(amounts));
}

Investment Investment::Zero(size_t num_issues) {
  return Investment(RationalVector(num_issues, Rational(0)));
}

std::vector<size_t> Investment::Support() const {
  std::vector<size_t> support;
  for (size_t i = 0; i < amounts_.size(); ++i) {
    if (sgn(amounts_[i]) > 0) support.push_back(i);
  }
  return support;
}

Profile Profile::With(size_t c, Investment investment) const {
  Profile copy = *this;
  copy.investments_.at(c) = std::move(investment);
  return copy;
}

RationalVector Profile::Total() const {
  if (investments_.empty()) return {};
  RationalVector total(investments_.front().size(), Rational(0));
  for (const Investment& inv : investments_) {
    for (size_t i = 0; i < total.size(); ++i) total[i] += inv[i];
  }
  return total;
}

RationalVector Profile::TotalExcluding(size_t c) const {
  if (investments_.empty()) return {};
  RationalVector total(investments_.front().size(), Rational(0));
  for (size_t k = 0; k < investments_.size(); ++k) {
    if (k == c) continue;
    for (size_t i = 0; i < total.size(); ++i) total[i] += investments_[k][i];
  }
  return total;
}

AggregatedGame::AggregatedGame(std::vector<std::string> candidates,
                               std::vector<std::string> issue_names,
                               std::vector<RationalVector> ranks,
                               RationalVector budgets)
    : candidates_(std::move(candidates)),
      issue_names_(std::move(issue_names)),
      ranks_(std::move(ranks)),
      budgets_(std::move(budgets)) {
  const size_t nc = candidates_.size();
  const size_t n = issue_names_.size() + 1;
  if (nc == 0) throw InputError("game needs at least one candidate");
  if (ranks_.size() != nc) {
    throw InputError("ranks given for " + std::to_string(ranks_.size()) +
                     " candidates, expected " + std::to_string(nc));
  }
  if (budgets_.size() != nc) {
    throw InputError("budgets has " + std::to_string(budgets_.size()) +
                     " entries, expected " + std::to_string(nc));
  }
  std::vector<Violation> names;
  CheckNames(candidates_, "candidate", names);
  CheckNames(issue_names_, "issue", names);
  if (!names.empty()) throw InputError(names.front().message);

  rank_sums_.assign(n, Rational(0));
  for (size_t c = 0; c < nc; ++c) {
    if (ranks_[c].size() != n) {
      throw InputError("rank vector of candidate \"" + candidates_[c] + "\" has " +
                       std::to_string(ranks_[c].size()) +
                       " entries, expected " + std::to_string(n) +
                       " (slack issue first)");
    }
    for (size_t i = 0; i < n; ++i) {
      if (sgn(ranks_[c][i]) < 0) {
        throw InputError("negative rank for candidate \"" + candidates_[c] + "\"");
      }
      rank_sums_[i] += ranks_[c][i];
    }
    if (sgn(budgets_[c]) < 0) {
      throw InputError("negative budget for candidate \"" + candidates_[c] + "\"");
    }
    total_budget_ += budgets_[c];
  }
  for (size_t i = 0; i < n; ++i) {
    if (is_active(i)) active_issues_.push_back(i);
  }
  if (sgn(total_budget_) > 0 && active_issues_.empty()) {
    throw InputError("no issue carries any rank: every vote share is undefined");
  }
}

std::string AggregatedGame::IssueLabel(size_t issue) const {
  if (issue == kSlackIssue) return "(slack)";
  return issue_names_.at(issue - 1);
}

RationalVector BiasTerms(const ElectionInstance& instance) {
  RationalVector bias(instance.candidates.size(), Rational(0));
  for (const VoterRecord& voter : instance.voters) {
    for (size_t c = 0; c < bias.size(); ++c) {
      bias[c] += Dot(voter.quality[c], voter.salience0);
    }
  }
  return bias;
}

AggregatedGame Aggregate(const ElectionInstance& instance) {
  std::vector<Violation> violations = ValidateInstance(instance);
  for (const Violation& v : violations) {
    if (v.rule == "zero-total-budget") {
      throw InputError("total budget zero: aggregation undefined");
    }
    if (v.rule == "degenerate-electorate") {
      throw InputError("degenerate instance: all vote shares undefined");
    }
  }
  if (!violations.empty()) {
    throw InputError("invalid instance: " + violations.front().message);
  }
  const size_t nc = instance.candidates.size();
  const size_t ni = instance.issues.size();
  const Rational total_budget = Sum(instance.budgets);
  const RationalVector bias = BiasTerms(instance);

  std::vector<RationalVector> ranks(nc, RationalVector(ni + 1));
  for (size_t c = 0; c < nc; ++c) {
    const Rational base = bias[c] / total_budget;
    ranks[c][kSlackIssue] = base;
    for (size_t i = 0; i < ni; ++i) {
      Rational quality_mass = 0;
      for (const VoterRecord& voter : instance.voters) {
        quality_mass += voter.quality[c][i];
      }
      ranks[c][i + 1] = base + quality_mass * instance.elasticities[i];
    }
  }
  return AggregatedGame(instance.candidates, instance.issues, std::move(ranks),
                        instance.budgets);
}

std::optional<std::string> ValidateInvestment(const AggregatedGame& game,
                                              size_t c,
                                              const Investment& investment) {
  const std::string who = "candidate \"" + game.candidates().at(c) + "\"";
  if (investment.size() != game.num_issues()) {
    return who + ": investment has " + std::to_string(investment.size()) +
           " entries, expected " + std::to_string(game.num_issues());
  }
  for (size_t i = 0; i < investment.size(); ++i) {
    if (sgn(investment[i]) < 0) {
      return who + ": negative spend on " + game.IssueLabel(i);
    }
    if (sgn(investment[i]) > 0 && !game.is_active(i)) {
      return who + ": spend on inert issue " + game.IssueLabel(i);
    }
  }
  if (investment.Total() != game.budget(c)) {
    return who + ": spends " + ToString(investment.Total()) + " but budget is " +
           ToString(game.budget(c));
  }
  return std::nullopt;
}

std::optional<std::string> ValidateProfile(const AggregatedGame& game,
                                           const Profile& profile) {
  if (profile.size() != game.num_candidates()) {
    return "profile has " + std::to_string(profile.size()) +
           " investments, expected " + std::to_string(game.num_candidates());
  }
  for (size_t c = 0; c < profile.size(); ++c) {
    if (auto err = ValidateInvestment(game, c, profile[c])) return err;
  }
  return std::nullopt;
}

void RequireValidProfile(const AggregatedGame& game, const Profile& profile) {
  if (auto err = ValidateProfile(game, profile)) throw InputError(*err);
}

RationalVector VoterVoteProbabilities(const ElectionInstance& instance,
                                      size_t voter, const Profile& profile) {
  const size_t ni = instance.issues.size();
  const VoterRecord& record = instance.voters.at(voter);
  const RationalVector total = profile.Total();
  if (total.size() != ni + 1) {
    throw InputError("profile width does not match instance issues");
  }
  // s^v_i(w_i) = rho_i * w_i + s^v_i(0), then normalized.
  RationalVector salience(ni);
  Rational norm = 0;
  for (size_t i = 0; i < ni; ++i) {
    salience[i] = instance.elasticities[i] * total[i + 1] + record.salience0[i];
    norm += salience[i];
  }
  RationalVector probs(instance.candidates.size(), Rational(0));
  if (sgn(norm) == 0) return probs;
  for (size_t c = 0; c < probs.size(); ++c) {
    probs[c] = Dot(record.quality[c], salience) / norm;
  }
  return probs;
}

VoterShares PerVoterShare(const ElectionInstance& instance,
                          const Profile& profile) {
  const size_t nc = instance.candidates.size();
  if (profile.size() != nc) {
    throw InputError("profile has " + std::to_string(profile.size()) +
                     " investments, expected " + std::to_string(nc));
  }
  for (size_t c = 0; c < nc; ++c) {
    const Investment& inv = profile[c];
    if (inv.size() != instance.issues.size() + 1) {
      throw InputError("investment width does not match instance issues");
    }
    Rational spent = 0;
    for (size_t i = 1; i < inv.size(); ++i) {
      if (sgn(inv[i]) < 0) throw InputError("negative investment");
      spent += inv[i];
    }
    if (spent > instance.budgets[c]) {
      throw InputError("candidate \"" + instance.candidates[c] +
                       "\" spends more than its budget");
    }
  }
  VoterShares out;
  out.votes.assign(nc, Rational(0));
  for (size_t v = 0; v < instance.voters.size(); ++v) {
    RationalVector probs = VoterVoteProbabilities(instance, v, profile);
    for (size_t c = 0; c < nc; ++c) out.votes[c] += probs[c];
  }
  const Rational total_votes = Sum(out.votes);
  if (sgn(total_votes) == 0) throw InputError("vote share undefined");
  out.shares.resize(nc);
  for (size_t c = 0; c < nc; ++c) out.shares[c] = out.votes[c] / total_votes;
  return out;
}

Profile CompleteWithSlack(const AggregatedGame& game, const Profile& profile) {
  std::vector<Investment> completed;
  completed.reserve(profile.size());
  for (size_t c = 0; c < profile.size(); ++c) {
    Investment inv = profile[c];
    Rational spent = 0;
    for (size_t i = 1; i < inv.size(); ++i) spent += inv[i];
    inv[kSlackIssue] = game.budget(c) - spent;
    completed.push_back(std::move(inv));
  }
  return Profile(std::move(completed));
}

}  // namespace priming
