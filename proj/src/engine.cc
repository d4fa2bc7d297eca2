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

#include "priming/engine.h"

#include <algorithm>

namespace priming {

UtilityKind UtilityKind::FromName(std::string_view name, Rational victory_weight) {
  if (name == "frac") return Frac();
  if (name == "ind") return Ind();
  if (name == "plus") return Plus(std::move(victory_weight));
  if (name == "max") return Max(std::move(victory_weight));
  throw InputError("unknown utility \"" + std::string(name) +
                   "\" (expected frac, ind, plus or max)");
}

std::string UtilityKind::name() const {
  switch (tag_) {
    case Tag::kFrac: return "frac";
    case Tag::kInd: return "ind";
    case Tag::kPlus: return "plus";
    case Tag::kMax: return "max";
  }
  return "?";
}

void UtilityKind::Validate(size_t num_candidates) const {
  if (uses_victory_weight() && victory_weight_ < Rational(num_candidates)) {
    throw InputError("victory weight V = " + ToString(victory_weight_) +
                     " must be at least the number of candidates (" +
                     std::to_string(num_candidates) + ")");
  }
}

MixedProfile MixedFromPure(const Profile& profile) {
  MixedProfile mixed;
  for (const Investment& inv : profile.investments()) {
    mixed.push_back({{inv}, {Rational(1)}});
  }
  return mixed;
}

std::optional<std::string> ValidateMixedProfile(const AggregatedGame& game,
                                                const MixedProfile& mixed) {
  if (mixed.size() != game.num_candidates()) {
    return "mixed profile has " + std::to_string(mixed.size()) +
           " strategies, expected " + std::to_string(game.num_candidates());
  }
  for (size_t c = 0; c < mixed.size(); ++c) {
    const MixedStrategy& s = mixed[c];
    if (s.investments.empty() || s.investments.size() != s.probabilities.size()) {
      return "candidate \"" + game.candidates()[c] +
             "\": support and probabilities do not line up";
    }
    Rational mass = 0;
    for (size_t k = 0; k < s.investments.size(); ++k) {
      if (sgn(s.probabilities[k]) < 0) {
        return "candidate \"" + game.candidates()[c] + "\": negative probability";
      }
      mass += s.probabilities[k];
      if (auto err = ValidateInvestment(game, c, s.investments[k])) return err;
    }
    if (mass != 1) {
      return "candidate \"" + game.candidates()[c] + "\": probabilities sum to " +
             ToString(mass);
    }
  }
  return std::nullopt;
}

RationalVector Votes(const AggregatedGame& game, const Profile& profile) {
  const RationalVector w = profile.Total();
  RationalVector p(game.num_candidates());
  for (size_t c = 0; c < p.size(); ++c) p[c] = Dot(game.ranks(c), w);
  return p;
}

namespace {

RationalVector SharesFromVotes(std::span<const Rational> votes) {
  const Rational total = Sum(votes);
  RationalVector shares(votes.size());
  if (sgn(total) == 0) {
    std::fill(shares.begin(), shares.end(), Rational(1, votes.size()));
    return shares;
  }
  for (size_t c = 0; c < votes.size(); ++c) shares[c] = votes[c] / total;
  return shares;
}

RationalVector VictoryFromVotes(std::span<const Rational> votes) {
  const Rational best = *std::max_element(votes.begin(), votes.end());
  const auto leaders = std::count(votes.begin(), votes.end(), best);
  RationalVector v(votes.size(), Rational(0));
  for (size_t c = 0; c < votes.size(); ++c) {
    if (votes[c] == best) v[c] = Rational(1, leaders);
  }
  return v;
}

}  // namespace

RationalVector VoteShare(const AggregatedGame& game, const Profile& profile) {
  return SharesFromVotes(Votes(game, profile));
}

RationalVector Victory(const AggregatedGame& game, const Profile& profile) {
  return VictoryFromVotes(Votes(game, profile));
}

PayoffVector PayoffFromVotes(std::span<const Rational> votes,
                             const UtilityKind& kind) {
  const RationalVector r = SharesFromVotes(votes);
  if (kind.tag() == UtilityKind::Tag::kFrac) return r;
  const RationalVector v = VictoryFromVotes(votes);
  if (kind.tag() == UtilityKind::Tag::kInd) return v;
  const Rational& weight = kind.victory_weight();
  PayoffVector out(votes.size());
  for (size_t c = 0; c < out.size(); ++c) {
    const Rational win = weight * v[c];
    if (kind.tag() == UtilityKind::Tag::kPlus) {
      out[c] = win + r[c];
    } else {
      out[c] = win > r[c] ? win : r[c];
    }
  }
  return out;
}

PayoffVector Utility(const AggregatedGame& game, const Profile& profile,
                     const UtilityKind& kind) {
  return PayoffFromVotes(Votes(game, profile), kind);
}

Rational ExpectedUtility(const AggregatedGame& game, const MixedProfile& mixed,
                         const UtilityKind& kind, size_t candidate) {
  if (auto err = ValidateMixedProfile(game, mixed)) throw InputError(*err);
  const size_t nc = mixed.size();
  std::vector<size_t> cursor(nc, 0);
  Rational expected = 0;
  while (true) {
    Rational weight = 1;
    std::vector<Investment> pure;
    pure.reserve(nc);
    for (size_t c = 0; c < nc; ++c) {
      weight *= mixed[c].probabilities[cursor[c]];
      pure.push_back(mixed[c].investments[cursor[c]]);
    }
    if (sgn(weight) != 0) {
      expected += weight * Utility(game, Profile(std::move(pure)), kind)[candidate];
    }
    size_t c = 0;
    for (; c < nc; ++c) {
      if (++cursor[c] < mixed[c].investments.size()) break;
      cursor[c] = 0;
    }
    if (c == nc) break;
  }
  return expected;
}

Rational FocusedUtility(const AggregatedGame& game, size_t c, size_t issue,
                        std::span<const Rational> opponents) {
  const Rational own = Dot(game.ranks(c), opponents);
  const Rational all = Dot(game.rank_sums(), opponents);
  const Rational& budget = game.budget(c);
  const Rational numerator = own + budget * game.rank(c, issue);
  const Rational denominator = all + budget * game.rank_sum(issue);
  if (sgn(denominator) == 0) return Rational(1, game.num_candidates());
  return numerator / denominator;
}

namespace {

void RequireInSupport(std::span<const size_t> support, size_t issue,
                      std::string_view what) {
  if (std::find(support.begin(), support.end(), issue) == support.end()) {
    throw InputError(std::string(what) + " " + std::to_string(issue) +
                     " is not in the support");
  }
}

}  // namespace

Investment ConciseToInvestment(const AggregatedGame& game, size_t c,
                               size_t default_issue,
                               std::span<const size_t> support,
                               const std::map<size_t, Rational>& x) {
  RequireInSupport(support, default_issue, "default issue");
  Investment inv = Investment::Zero(game.num_issues());
  Rational rest = game.budget(c);
  for (const auto& [issue, amount] : x) {
    RequireInSupport(support, issue, "coordinate");
    if (issue == default_issue) {
      throw InputError("the default issue has no concise coordinate");
    }
    if (sgn(amount) < 0) throw InputError("negative concise coordinate");
    inv[issue] = amount;
    rest -= amount;
  }
  if (sgn(rest) < 0) throw InputError("concise coordinates exceed the budget");
  inv[default_issue] = rest;
  return inv;
}

std::map<size_t, Rational> ReducedGradientNumerator(
    const AggregatedGame& game, size_t c, size_t default_issue,
    std::span<const size_t> support, const std::map<size_t, Rational>& x,
    std::span<const Rational> opponents) {
  const size_t j = default_issue;
  const Investment w = ConciseToInvestment(game, c, j, support, x);
  const Rational own_base = Dot(game.ranks(c), opponents);
  const Rational all_base = Dot(game.rank_sums(), opponents);

  std::map<size_t, Rational> out;
  for (size_t i : support) {
    if (i == j) continue;
    Rational own_rest = own_base;
    Rational all_rest = all_base;
    Rational others = 0;  // sum of x_k over k not in {i, j}
    for (size_t k : support) {
      if (k == i || k == j) continue;
      own_rest += game.rank(c, k) * w[k];
      all_rest += game.rank_sum(k) * w[k];
      others += w[k];
    }
    const Rational& qi = game.rank(c, i);
    const Rational& qj = game.rank(c, j);
    const Rational& si = game.rank_sum(i);
    const Rational& sj = game.rank_sum(j);
    out[i] = qi * all_rest - si * own_rest - qj * all_rest + sj * own_rest +
             (qi * sj - si * qj) * (game.budget(c) - others);
  }
  return out;
}

}  // namespace priming
