#include <doctest.h>

#include "priming/counterexamples.h"
#include "priming/io.h"
#include "test_support.h"

namespace priming {
namespace {

using testing::Q;

const char* kInstance = R"({
  "candidates": ["c1", "c2"],
  "issues": ["economy", "health"],
  "rho": [1, 2],
  "budgets": ["1", "1"],
  "voters": [
    {"quality": {"c1": ["0.5", "0.2"], "c2": ["3/10", "2/5"]},
     "salience0": ["3/5", "0.4"]}
  ]
})";

TEST_CASE("rationals from json") {
  CHECK(RationalFromJson(Json(3), "x") == 3);
  CHECK(RationalFromJson(Json(-3), "x") == -3);
  CHECK(RationalFromJson(Json("6/4"), "x") == Q(3, 2));
  CHECK_THROWS_AS(RationalFromJson(Json(0.5), "x"), InputError);
  CHECK_THROWS_AS(RationalFromJson(Json(true), "x"), InputError);
  CHECK_THROWS_AS(RationalFromJson(Json("1/0"), "x"), InputError);
  CHECK(RationalToJson(Q(6, 4)) == Json("3/2"));
  CHECK(RationalToJson(4) == Json("4"));
}

TEST_CASE("instance parses and aggregates") {
  const LoadedGame loaded = LoadGame(ParseJsonText(kInstance));
  REQUIRE(loaded.instance);
  CHECK(loaded.game.ranks(0) == RationalVector{Q(19, 100), Q(69, 100), Q(59, 100)});
  CHECK(loaded.game.ranks(1) == RationalVector{Q(17, 100), Q(47, 100), Q(97, 100)});
}

TEST_CASE("instance round trip") {
  testing::Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    const ElectionInstance inst = testing::RandomInstance(rng, 3, 2, 3);
    const Json doc = InstanceToJson(inst);
    const ElectionInstance back = InstanceFromJson(ParseJsonText(doc.dump()));
    CHECK(InstanceToJson(back) == doc);
    CHECK(Aggregate(back) == Aggregate(inst));
  }
}

TEST_CASE("compact game round trip") {
  for (const AggregatedGame& g : {SplitGame(), PlusGame(), MaxGame(), UnnaturalGame()}) {
    const Json doc = CompactGameToJson(g);
    CHECK(IsCompactGame(doc));
    CHECK(CompactGameFromJson(ParseJsonText(doc.dump())) == g);
  }
}

TEST_CASE("keys come out sorted") {
  const std::string text = CompactGameToJson(PlusGame()).dump();
  CHECK(text.find("\"budgets\"") < text.find("\"candidates\""));
  CHECK(text.find("\"candidates\"") < text.find("\"issues\""));
  CHECK(text.find("\"issues\"") < text.find("\"ranks\""));
  CHECK(text == CompactGameToJson(PlusGame()).dump());
}

TEST_CASE("malformed documents") {
  CHECK_THROWS_AS(ParseJsonText("{"), InputError);
  Json doc = ParseJsonText(kInstance);
  doc.erase("rho");
  CHECK_THROWS_AS(InstanceFromJson(doc), InputError);
  doc = ParseJsonText(kInstance);
  doc["voters"][0]["quality"]["c3"] = {"0", "0"};
  CHECK_THROWS_AS(InstanceFromJson(doc), InputError);
  doc = ParseJsonText(kInstance);
  doc["budgets"][0] = 1.5;
  CHECK_THROWS_AS(InstanceFromJson(doc), InputError);
  Json compact = CompactGameToJson(SplitGame());
  compact["ranks"].erase("c2");
  CHECK_THROWS_AS(CompactGameFromJson(compact), InputError);
}

TEST_CASE("profiles") {
  const AggregatedGame g = SplitGame();
  const Json full = ParseJsonText(
      R"({"investments": {"c1": [0, "1/2", "1/2"], "c2": [0, 0, 0], "c3": [0, 0, 0]}})");
  const Profile p = ProfileFromJson(g, full);
  CHECK(p[0].amounts() == RationalVector{0, Q(1, 2), Q(1, 2)});
  CHECK(ProfileFromJson(g, ProfileToJson(g, p)) == p);

  // Bare map with user issues only: slack takes the rest.
  const Json bare = ParseJsonText(R"({"c1": ["1/4", 0], "c2": [0, 0], "c3": [0, 0]})");
  CHECK(ProfileFromJson(g, bare)[0].amounts() == RationalVector{Q(3, 4), Q(1, 4), 0});

  CHECK_THROWS_AS(ProfileFromJson(g, ParseJsonText(R"({"c1": [1]})")), InputError);
  CHECK_THROWS_AS(
      ProfileFromJson(g, ParseJsonText(R"({"c1": [0, 1], "c2": [0, 0], "c3": [0, 0], "c4": [0]})")),
      InputError);
}

TEST_CASE("dotted candidate names") {
  const AggregatedGame g({"a.b", "c"}, {"x"}, {{0, 1}, {0, 2}}, {1, 1});
  const Profile p = ProfileFromJson(g, ParseJsonText(R"({"a.b": [1], "c": [1]})"));
  CHECK(p[0].amounts() == RationalVector{0, 1});
}

TEST_CASE("mixed profiles") {
  const AggregatedGame g = SplitGame();
  const MixedProfile m = MixedProfileFromJson(g, ParseJsonText(R"({"mixed": {
    "c1": [{"probability": "1/3", "investment": [1, 0]},
           {"probability": "2/3", "investment": [0, 1]}],
    "c2": [{"probability": 1, "investment": [0, 0]}],
    "c3": [{"probability": 1, "investment": [0, 0]}]}})"));
  REQUIRE(m[0].investments.size() == 2);
  CHECK(m[0].probabilities[1] == Q(2, 3));
  CHECK(m[0].investments[1].amounts() == RationalVector{0, 0, 1});
}

TEST_CASE("reports serialize") {
  const RationalVector idle(3, Rational(0));
  const Json r = ReportToJson(PlusGame(), BestResponse(PlusGame(), 0, idle,
                                                       UtilityKind::Plus(4), Q(1, 100)));
  CHECK(r["attained"] == false);
  CHECK(r["value"] == "216/49");
  const Investment one({0, 1, 0, 0});
  const Json c = CertificateToJson(
      UnnaturalGame(),
      VerifyEquilibrium(UnnaturalGame(), Profile({one, one, one}), UtilityKind::Ind()));
  CHECK(c["status"] == "equilibrium");
  CHECK(PayoffsToJson(SplitGame(), {Q(1, 3), Q(1, 3), Q(1, 3)})["c2"] == "1/3");
}

TEST_CASE("digest") {
  CHECK(Digest("") == "cbf29ce484222325");
  CHECK(Digest("a") == "af63dc4c8601ec8c");
  CHECK(Digest("foobar") == "85944171f73967e8");
}

}  // namespace
}  // namespace priming
