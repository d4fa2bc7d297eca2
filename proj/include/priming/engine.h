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

#ifndef PRIMING_ENGINE_H_
#define PRIMING_ENGINE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "priming/model.h"
#include "priming/rational.h"

namespace priming {

// Which payoff the candidates maximize.
//   Frac: r.  Ind: v.  Plus: V*v + r.  Max: max(V*v, r).
class UtilityKind {
 public:
  enum class Tag { kFrac, kInd, kPlus, kMax };

  static UtilityKind Frac() { return UtilityKind(Tag::kFrac, 0); }
  static UtilityKind Ind() { return UtilityKind(Tag::kInd, 0); }
  static UtilityKind Plus(Rational victory_weight) {
    return UtilityKind(Tag::kPlus, std::move(victory_weight));
  }
  static UtilityKind Max(Rational victory_weight) {
    return UtilityKind(Tag::kMax, std::move(victory_weight));
  }
  // "frac", "ind", "plus", "max"; the weight is ignored for frac and ind.
  static UtilityKind FromName(std::string_view name, Rational victory_weight);

  Tag tag() const { return tag_; }
  const Rational& victory_weight() const { return victory_weight_; }
  bool uses_victory_weight() const {
    return tag_ == Tag::kPlus || tag_ == Tag::kMax;
  }
  std::string name() const;

  // Throws InputError unless V >= |C| for Plus and Max.
  void Validate(size_t num_candidates) const;

  friend bool operator==(const UtilityKind&, const UtilityKind&) = default;

 private:
  UtilityKind(Tag tag, Rational v) : tag_(tag), victory_weight_(std::move(v)) {}
  Tag tag_;
  Rational victory_weight_;
};

using PayoffVector = RationalVector;

// A finite-support mixed strategy per candidate.
struct MixedStrategy {
  std::vector<Investment> investments;
  RationalVector probabilities;
};
using MixedProfile = std::vector<MixedStrategy>;

MixedProfile MixedFromPure(const Profile& profile);
std::optional<std::string> ValidateMixedProfile(const AggregatedGame& game,
                                                const MixedProfile& mixed);

// p(c, w) = Q^c . w for every candidate.
RationalVector Votes(const AggregatedGame& game, const Profile& profile);

// r(c, w) = Q^c . w / Q* . w. When nobody receives a vote (only possible
// with zero total budget) every candidate gets 1/|C|.
RationalVector VoteShare(const AggregatedGame& game, const Profile& profile);

// 1/|argmax p| for the leaders, 0 otherwise; exact comparison.
RationalVector Victory(const AggregatedGame& game, const Profile& profile);

// Payoffs from a raw vote vector. Shared by the aggregated path and the
// per-voter reference path.
PayoffVector PayoffFromVotes(std::span<const Rational> votes,
                             const UtilityKind& kind);

PayoffVector Utility(const AggregatedGame& game, const Profile& profile,
                     const UtilityKind& kind);

// Probability-weighted utility of `candidate` over the product of supports.
// Cost is the product of support sizes.
Rational ExpectedUtility(const AggregatedGame& game, const MixedProfile& mixed,
                         const UtilityKind& kind, size_t candidate);

// u_frac of c when it puts its whole budget on `issue` against the
// aggregate opponent investment w^{-c}:
//   (B^c + W^c Q^c_i) / (B* + W^c Q*_i),  B^c = Q^c . w^{-c}, B* = Q* . w^{-c}.
Rational FocusedUtility(const AggregatedGame& game, size_t c, size_t issue,
                        std::span<const Rational> opponents);

// Concise investment representation over support J with default issue j:
// x_i for i in J \ {j}; the default issue takes W^c - sum x.
Investment ConciseToInvestment(const AggregatedGame& game, size_t c,
                               size_t default_issue,
                               std::span<const size_t> support,
                               const std::map<size_t, Rational>& x);

// Numerator of d u_frac / d x_i (denominator (B* + Q* . w^c)^2 > 0) for every
// i in J \ {j}, in the closed form that does not involve x_i:
//   Q^c_i (B* + S*) - Q*_i (B^c + S^c) - Q^c_j (B* + S*) + Q*_j (B^c + S^c)
//     + (Q^c_i Q*_j - Q*_i Q^c_j) (W^c - sum_{k not in {i,j}} x_k)
// with S = sum over k not in {i, j} of Q_k w^c_k. Throws InputError when j or
// an x coordinate lies outside J.
std::map<size_t, Rational> ReducedGradientNumerator(
    const AggregatedGame& game, size_t c, size_t default_issue,
    std::span<const size_t> support, const std::map<size_t, Rational>& x,
    std::span<const Rational> opponents);

}  // namespace priming

#endif  // PRIMING_ENGINE_H_
