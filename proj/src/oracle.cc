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

#include "priming/oracle.h"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>

namespace priming {

std::uint64_t OracleBudget() {
  const char* raw = std::getenv(kOracleBudgetVariable);
  if (raw == nullptr || *raw == '\0') return kDefaultOracleBudget;
  std::string_view text(raw);
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value == 0) {
    throw InputError(std::string(kOracleBudgetVariable) + " must be a positive integer, got \"" +
                     std::string(text) + "\"");
  }
  return value;
}

namespace {

void Compose(size_t units, size_t slot, std::vector<size_t>& parts,
             std::vector<std::vector<size_t>>& out) {
  if (slot + 1 == parts.size()) {
    parts[slot] = units;
    out.push_back(parts);
    return;
  }
  for (size_t u = 0; u <= units; ++u) {
    parts[slot] = u;
    Compose(units - u, slot + 1, parts, out);
  }
}

std::vector<std::vector<size_t>> Compositions(size_t units, size_t slots) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> parts(slots, 0);
  Compose(units, 0, parts, out);
  return out;
}

class Meter {
 public:
  explicit Meter(std::uint64_t budget) : budget_(budget) {}
  void Charge(std::uint64_t n) {
    used_ += n;
    if (used_ > budget_) {
      throw InputError("grid oracle exceeds its evaluation budget of " +
                       std::to_string(budget_) + " (set " + kOracleBudgetVariable +
                       " to raise it)");
    }
  }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t budget_;
  std::uint64_t used_ = 0;
};

Rational PayoffOf(const AggregatedGame& game, size_t c, std::span<const Rational> opponents,
                  const Investment& own, const UtilityKind& kind) {
  RationalVector total(opponents.begin(), opponents.end());
  for (size_t i = 0; i < total.size(); ++i) total[i] += own[i];
  RationalVector votes(game.num_candidates());
  for (size_t d = 0; d < votes.size(); ++d) votes[d] = Dot(game.ranks(d), total);
  return PayoffFromVotes(votes, kind)[c];
}

}  // namespace

std::vector<Investment> GridStrategies(const GridSpec& spec) {
  if (spec.resolution == 0) throw InputError("grid resolution must be at least 1");
  if (spec.num_issues == 0) throw InputError("grid needs at least one issue");
  const Rational unit = spec.budget / Rational(spec.resolution);
  std::vector<Investment> out;
  for (const std::vector<size_t>& parts : Compositions(spec.resolution, spec.num_issues)) {
    RationalVector amounts(parts.size());
    for (size_t i = 0; i < parts.size(); ++i) amounts[i] = unit * Rational(parts[i]);
    out.emplace_back(std::move(amounts));
  }
  return out;
}

std::vector<Investment> CandidateGrid(const AggregatedGame& game, size_t c,
                                      size_t resolution) {
  const std::vector<size_t>& active = game.active_issues();
  if (sgn(game.budget(c)) == 0 || active.empty()) {
    return {Investment::Zero(game.num_issues())};
  }
  std::vector<Investment> out;
  for (const Investment& point :
       GridStrategies({resolution, active.size(), game.budget(c)})) {
    Investment inv = Investment::Zero(game.num_issues());
    for (size_t k = 0; k < active.size(); ++k) inv[active[k]] = point[k];
    out.push_back(std::move(inv));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GridBestResponse BruteForceBestResponse(const AggregatedGame& game, size_t c,
                                        std::span<const Rational> opponents,
                                        const UtilityKind& kind, size_t resolution,
                                        std::uint64_t budget) {
  Meter meter(budget);
  GridBestResponse best;
  bool first = true;
  for (const Investment& inv : CandidateGrid(game, c, resolution)) {
    meter.Charge(1);
    Rational value = PayoffOf(game, c, opponents, inv, kind);
    if (first || value > best.value) {
      best.value = std::move(value);
      best.witness = inv;
      first = false;
    }
  }
  best.evaluations = meter.used();
  return best;
}

namespace {

// Largest gain for c over its grid, charging the meter.
Rational BestGain(const AggregatedGame& game, const Profile& profile, size_t c,
                  const std::vector<Investment>& grid, const UtilityKind& kind,
                  Meter& meter) {
  const RationalVector opp = profile.TotalExcluding(c);
  const Rational current = PayoffOf(game, c, opp, profile[c], kind);
  Rational gain = 0;
  meter.Charge(grid.size());
  for (const Investment& inv : grid) {
    Rational g = PayoffOf(game, c, opp, inv, kind) - current;
    if (g > gain) gain = std::move(g);
  }
  return gain;
}

}  // namespace

std::vector<Profile> BruteForceEpsilonEquilibria(const AggregatedGame& game,
                                                 const UtilityKind& kind,
                                                 size_t resolution,
                                                 const Rational& epsilon,
                                                 std::uint64_t budget) {
  if (sgn(epsilon) < 0) throw InputError("epsilon must be nonnegative");
  const size_t nc = game.num_candidates();
  std::vector<std::vector<Investment>> grids;
  for (size_t c = 0; c < nc; ++c) grids.push_back(CandidateGrid(game, c, resolution));

  Meter meter(budget);
  std::vector<Profile> out;
  std::vector<size_t> cursor(nc, 0);
  while (true) {
    std::vector<Investment> invs;
    for (size_t c = 0; c < nc; ++c) invs.push_back(grids[c][cursor[c]]);
    Profile profile(std::move(invs));
    bool stable = true;
    for (size_t c = 0; c < nc && stable; ++c) {
      if (BestGain(game, profile, c, grids[c], kind, meter) > epsilon) stable = false;
    }
    if (stable) out.push_back(std::move(profile));
    bool done = true;
    for (size_t c = nc; c-- > 0;) {
      if (++cursor[c] < grids[c].size()) {
        done = false;
        break;
      }
      cursor[c] = 0;
    }
    if (done) break;
  }
  return out;
}

Rational GridDeviationGain(const AggregatedGame& game, const Profile& profile,
                           const UtilityKind& kind, size_t resolution,
                           std::uint64_t budget) {
  RequireValidProfile(game, profile);
  Meter meter(budget);
  Rational gain = 0;
  for (size_t c = 0; c < game.num_candidates(); ++c) {
    Rational g = BestGain(game, profile, c, CandidateGrid(game, c, resolution), kind, meter);
    if (g > gain) gain = std::move(g);
  }
  return gain;
}

}  // namespace priming
