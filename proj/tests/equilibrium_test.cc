#include <doctest.h>

#include "priming/counterexamples.h"
#include "priming/equilibrium.h"
#include "priming/oracle.h"
#include "test_support.h"

namespace priming {
namespace {

using testing::Q;

AggregatedGame Mirrored() {
  return AggregatedGame({"c1", "c2"}, {"1", "2"}, {{0, 2, 1}, {0, 1, 2}}, {1, 1});
}

TEST_CASE("general frac: mirrored game") {
  const EquilibriumCertificate cert = NashFracGeneral(Mirrored());
  REQUIRE(cert.valid());
  CHECK(cert.supports == SupportAssignment{{1}, {2}});
  CHECK(cert.profile[0].amounts() == RationalVector{0, 1, 0});
  CHECK(cert.profile[1].amounts() == RationalVector{0, 0, 1});
  CHECK(cert.utilities == RationalVector{Q(1, 2), Q(1, 2)});
}

TEST_CASE("general frac: single candidate goes all in on its best issue") {
  const AggregatedGame g({"solo"}, {"x", "y"}, {{1, 1, 1}}, {2});
  const EquilibriumCertificate cert = NashFracGeneral(g);
  REQUIRE(cert.valid());
  CHECK(cert.profile[0].Support().size() == 1);
}

TEST_CASE("general frac: nobody has budget") {
  const AggregatedGame g({"a", "b"}, {"x"}, {{1, 2}, {2, 1}}, {0, 0});
  const EquilibriumCertificate cert = NashFracGeneral(g);
  REQUIRE(cert.valid());
  CHECK(cert.profile[0] == Investment::Zero(2));
  CHECK(cert.profile[1] == Investment::Zero(2));
}

TEST_CASE("general frac: random small games survive the grid") {
  testing::Rng rng(61);
  for (int t = 0; t < 25; ++t) {
    const AggregatedGame g =
        testing::RandomGame(rng, testing::Uniform(rng, 2, 3), testing::Uniform(rng, 1, 3));
    const EquilibriumCertificate cert = NashFracGeneral(g);
    REQUIRE(cert.valid());
    CHECK(VerifyEquilibrium(g, cert.profile, UtilityKind::Frac()).valid());
    CHECK(GridDeviationGain(g, cert.profile, UtilityKind::Frac(), 6) == 0);
  }
}

TEST_CASE("two candidates: mirrored game under frac") {
  const EquilibriumCertificate cert = NashTwoCandidates(Mirrored(), UtilityKind::Frac());
  REQUIRE(cert.valid());
  CHECK(cert.profile[0].Support() == std::vector<size_t>{1});
  CHECK(cert.profile[1].Support() == std::vector<size_t>{2});
  CHECK(cert.utilities == RationalVector{Q(1, 2), Q(1, 2)});
}

TEST_CASE("two candidates: symmetric game") {
  const AggregatedGame g({"a", "b"}, {"x", "y", "z"}, {{1, 3, 2, 5}, {1, 3, 2, 5}}, {2, 1});
  const EquilibriumCertificate cert = NashTwoCandidates(g, UtilityKind::Frac());
  REQUIRE(cert.valid());
  CHECK(cert.profile[0].Support() == cert.profile[1].Support());
}

TEST_CASE("two candidates: ind plays dominant issues") {
  const AggregatedGame g({"a", "b"}, {"1", "2"}, {{0, 3, 1}, {0, 1, 2}}, {1, 1});
  const EquilibriumCertificate cert = NashTwoCandidates(g, UtilityKind::Ind());
  REQUIRE(cert.valid());
  CHECK(cert.profile[0].Support() == std::vector<size_t>{1});
  CHECK(cert.profile[1].Support() == std::vector<size_t>{2});
}

TEST_CASE("two candidates: own ranks climb") {
  testing::Rng rng(62);
  for (int t = 0; t < 50; ++t) {
    const AggregatedGame g = testing::RandomGame(rng, 2, testing::Uniform(rng, 1, 12));
    const EquilibriumCertificate cert = NashTwoCandidates(g, UtilityKind::Frac());
    REQUIRE(cert.valid());
    CHECK(cert.iterations <= 2 * (g.num_issues() - 1) + 2);
    for (size_t c = 0; c < 2; ++c) {
      const auto& trace = cert.issue_trace[c];
      for (size_t k = 1; k < trace.size(); ++k) {
        CHECK(g.rank(c, trace[k - 1]) < g.rank(c, trace[k]));
      }
    }
  }
}

TEST_CASE("two candidates only") {
  CHECK_THROWS_AS(NashTwoCandidates(SplitGame(), UtilityKind::Frac()), InputError);
}

TEST_CASE("verify: unnatural equilibrium") {
  const Investment one({0, 1, 0, 0});
  const EquilibriumCertificate cert =
      VerifyEquilibrium(UnnaturalGame(), Profile({one, one, one}), UtilityKind::Ind());
  CHECK(cert.valid());
  CHECK(cert.utilities == RationalVector{1, 0, 0});
}

TEST_CASE("verify: split game off balance") {
  const Investment none = Investment::Zero(3);
  const Profile p({Investment({0, Q(3, 5), Q(2, 5)}), none, none});
  const EquilibriumCertificate cert = VerifyEquilibrium(SplitGame(), p, UtilityKind::Ind());
  CHECK(cert.status == CertificateStatus::kNotEquilibrium);
  REQUIRE(cert.checks[0].improving_deviation);
  CHECK(cert.checks[0].utility == 0);
  CHECK(cert.checks[0].best_deviation_value == Q(1, 3));
  CHECK(cert.checks[0].improving_deviation->amounts() ==
        RationalVector{0, Q(1, 2), Q(1, 2)});
}

TEST_CASE("verify: frac needs support indifference") {
  // c1 splits between a strong and a weak issue.
  const Profile p({Investment({0, Q(1, 2), Q(1, 2)}), Investment({0, 0, 1})});
  const EquilibriumCertificate cert = VerifyEquilibrium(Mirrored(), p, UtilityKind::Frac());
  CHECK_FALSE(cert.valid());
  CHECK_FALSE(cert.checks[0].support_indifferent);
}

TEST_CASE("verify: malformed profile") {
  CHECK_THROWS_AS(VerifyEquilibrium(Mirrored(), Profile({Investment({0, 1, 0})}),
                                    UtilityKind::Frac()),
                  InputError);
}

TEST_CASE("ind search: unnatural start is already stable") {
  const Investment one({0, 1, 0, 0});
  const EquilibriumCertificate cert =
      EquilibriumSearchInd(UnnaturalGame(), 10, Profile({one, one, one}));
  REQUIRE(cert.valid());
  CHECK(cert.profile == Profile({one, one, one}));
  CHECK(cert.iterations <= 1);
}

TEST_CASE("ind search: two candidates match the dominant pair") {
  testing::Rng rng(63);
  for (int t = 0; t < 30; ++t) {
    const AggregatedGame g = testing::RandomGame(rng, 2, 4);
    const EquilibriumCertificate search = EquilibriumSearchInd(g, 50);
    const EquilibriumCertificate dom = NashTwoCandidates(g, UtilityKind::Ind());
    REQUIRE(search.valid());
    CHECK(search.utilities == dom.utilities);
  }
}

TEST_CASE("dynamics: max game cycles") {
  const EquilibriumCertificate cert =
      BestResponseDynamics(MaxGame(), UtilityKind::Max(4), std::nullopt, 100);
  CHECK(cert.status == CertificateStatus::kUnknown);
  CHECK(cert.note.rfind("cycle", 0) == 0);
}

TEST_CASE("dynamics: frac converges on the mirrored game") {
  const EquilibriumCertificate cert =
      BestResponseDynamics(Mirrored(), UtilityKind::Frac(), std::nullopt, 20);
  CHECK(cert.valid());
}

TEST_CASE("status names") {
  CHECK(ToString(CertificateStatus::kEquilibrium) == "equilibrium");
  CHECK(ToString(CertificateStatus::kUnknown) == "unknown");
}

}  // namespace
}  // namespace priming
