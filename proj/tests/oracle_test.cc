#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "priming/counterexamples.h"
#include "priming/oracle.h"
#include "test_support.h"

namespace priming {
namespace {

using testing::Q;

TEST_CASE("grid enumeration") {
  const auto two = GridStrategies({2, 2, 1});
  REQUIRE(two.size() == 3);
  CHECK(two[0].amounts() == RationalVector{0, 1});
  CHECK(two[1].amounts() == RationalVector{Q(1, 2), Q(1, 2)});
  CHECK(two[2].amounts() == RationalVector{1, 0});

  const auto focused = GridStrategies({1, 5, 3});
  CHECK(focused.size() == 5);
  for (const Investment& inv : focused) CHECK(inv.Support().size() == 1);

  const auto fifteen = GridStrategies({4, 3, 1});
  CHECK(fifteen.size() == 15);
  CHECK(std::is_sorted(fifteen.begin(), fifteen.end()));
  for (const Investment& inv : fifteen) CHECK(inv.Total() == 1);

  CHECK_THROWS_AS(GridStrategies({0, 3, 1}), InputError);
  CHECK_THROWS_AS(GridStrategies({3, 0, 1}), InputError);
}

TEST_CASE("candidate grid skips inert issues") {
  const AggregatedGame g = SplitGame();
  const auto grid = CandidateGrid(g, 0, 2);
  REQUIRE(grid.size() == 3);
  for (const Investment& inv : grid) CHECK(inv[0] == 0);
  CHECK(CandidateGrid(g, 1, 5) == std::vector<Investment>{Investment::Zero(3)});
}

TEST_CASE("split game on the coarse grid") {
  const RationalVector idle(3, Rational(0));
  const GridBestResponse r = BruteForceBestResponse(SplitGame(), 0, idle, UtilityKind::Ind(), 2);
  CHECK(r.witness.amounts() == RationalVector{0, Q(1, 2), Q(1, 2)});
  CHECK(r.value == Q(1, 3));
  CHECK(r.evaluations == 3);
}

TEST_CASE("plus game on the k = 10 grid") {
  const RationalVector idle(3, Rational(0));
  const GridBestResponse r =
      BruteForceBestResponse(PlusGame(), 0, idle, UtilityKind::Plus(4), 10);
  CHECK(r.witness.amounts() == RationalVector{0, Q(2, 5), Q(3, 5)});
  CHECK(r.value == 4 + Q(25, 63));
  CHECK(r.value < 4 + Q(20, 49));
}

TEST_CASE("unnatural game: all on issue 1 is a grid equilibrium") {
  const auto eq = BruteForceEpsilonEquilibria(UnnaturalGame(), UtilityKind::Ind(), 1, 0);
  const Investment one({0, 1, 0, 0});
  CHECK(std::find(eq.begin(), eq.end(), Profile({one, one, one})) != eq.end());
}

TEST_CASE("single candidate: grid equilibria are its frac optima") {
  const AggregatedGame g({"solo"}, {"x", "y"}, {{1, 2, 2}}, {1});
  const auto eq = BruteForceEpsilonEquilibria(g, UtilityKind::Frac(), 2, 0);
  CHECK(eq.size() == 6);  // every grid point, since the share is always 1
}

TEST_CASE("evaluation budget") {
  const RationalVector idle(3, Rational(0));
  CHECK_THROWS_AS(BruteForceBestResponse(SplitGame(), 0, idle, UtilityKind::Ind(), 20, 5),
                  InputError);
  CHECK_THROWS_AS(GridDeviationGain(SplitGame(),
                                    Profile({Investment({0, 1, 0}), Investment::Zero(3),
                                             Investment::Zero(3)}),
                                    UtilityKind::Ind(), 20, 5),
                  InputError);
}

TEST_CASE("budget environment override") {
  ::unsetenv(kOracleBudgetVariable);
  CHECK(OracleBudget() == kDefaultOracleBudget);
  ::setenv(kOracleBudgetVariable, "1234", 1);
  CHECK(OracleBudget() == 1234);
  ::setenv(kOracleBudgetVariable, "lots", 1);
  CHECK_THROWS_AS(OracleBudget(), InputError);
  ::setenv(kOracleBudgetVariable, "0", 1);
  CHECK_THROWS_AS(OracleBudget(), InputError);
  ::unsetenv(kOracleBudgetVariable);
}

TEST_CASE("deviation gain on the split game") {
  const Investment none = Investment::Zero(3);
  const Profile off({Investment({0, Q(3, 5), Q(2, 5)}), none, none});
  CHECK(GridDeviationGain(SplitGame(), off, UtilityKind::Ind(), 2) == Q(1, 3));
  const Profile on({Investment({0, Q(1, 2), Q(1, 2)}), none, none});
  CHECK(GridDeviationGain(SplitGame(), on, UtilityKind::Ind(), 20) == 0);
}

}  // namespace
}  // namespace priming
