#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "priming/cli.h"
#include "priming/counterexamples.h"
#include "priming/io.h"

namespace priming {
namespace {

namespace fs = std::filesystem;

const char* kInstance = R"({
  "candidates": ["c1", "c2"],
  "issues": ["economy", "health"],
  "rho": [1, 2],
  "budgets": [1, 1],
  "voters": [{"quality": {"c1": ["0.5", "0.2"], "c2": ["0.3", "0.4"]},
              "salience0": ["0.6", "0.4"]}]
})";

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run Cli(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

// Scratch files, removed when the fixture goes away.
class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("priming_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string Write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path dir_;
};

TEST_CASE("validate") {
  Scratch s;
  CHECK(Cli({"validate", s.Write("ok.json", kInstance)}).code == kExitOk);

  Json bad = ParseJsonText(kInstance);
  bad["voters"][0]["salience0"] = {"0.6", "0.5"};
  const Run r = Cli({"validate", s.Write("bad.json", bad.dump())});
  CHECK(r.code == kExitInvalid);
  CHECK(r.out.find("salience-sum") != std::string::npos);

  Json missing = ParseJsonText(kInstance);
  missing.erase("budgets");
  const Run m = Cli({"validate", s.Write("missing.json", missing.dump())});
  CHECK(m.code == kExitInvalid);
  CHECK(m.err.find("budgets") != std::string::npos);
}

TEST_CASE("aggregate reads stdin and round-trips") {
  const Run r = Cli({"aggregate", "-"}, kInstance);
  REQUIRE(r.code == kExitOk);
  const Json doc = ParseJsonText(r.out);
  CHECK(doc["ranks"]["c1"] == Json({"19/100", "69/100", "59/100"}));
  CHECK(doc["ranks"]["c2"] == Json({"17/100", "47/100", "97/100"}));
  const Run again = Cli({"aggregate", "-"}, r.out);
  REQUIRE(again.code == kExitOk);
  CHECK(ParseJsonText(again.out)["ranks"] == doc["ranks"]);
}

TEST_CASE("aggregate refuses zero total budget") {
  Json doc = ParseJsonText(kInstance);
  doc["budgets"] = {0, 0};
  CHECK(Cli({"aggregate", "-"}, doc.dump()).code == kExitInvalid);
}

TEST_CASE("eval json and csv") {
  Scratch s;
  const std::string game = s.Write("g.json", kInstance);
  const std::string prof =
      s.Write("p.json", R"({"investments": {"c1": [1, 0], "c2": [0, 1]}})");
  const Run j = Cli({"eval", game, prof});
  REQUIRE(j.code == kExitOk);
  CHECK(ParseJsonText(j.out)["shares"]["c1"] == "8/17");
  const Run c = Cli({"--output", "csv", "eval", game, prof});
  REQUIRE(c.code == kExitOk);
  CHECK(c.out.rfind("candidate,votes,share,victory,payoff\n", 0) == 0);
  CHECK(c.out.find("c1,32/25,8/17,0,8/17") != std::string::npos);
  CHECK(Cli({"--output", "csv", "nash", game}).code == kExitInvalid);
}

TEST_CASE("best response on the plus game") {
  Scratch s;
  const std::string game = s.Write("plus.json", CompactGameToJson(PlusGame()).dump());
  const std::string idle = s.Write("idle.json", R"({"c1": [0, 1, 0], "c2": [0, 0, 0], "c3": [0, 0, 0]})");
  const Run r = Cli({"--utility", "plus", "--victory-weight", "4", "best-response", game, idle,
                     "--responder", "c1"});
  REQUIRE(r.code == kExitOk);
  const Json doc = ParseJsonText(r.out);
  CHECK(doc["attained"] == false);
  CHECK(doc["value"] == "216/49");
  CHECK(Cli({"best-response", game, idle, "--responder", "nobody"}).code == kExitInvalid);
}

TEST_CASE("nash and verify") {
  Scratch s;
  const std::string game = s.Write("unnatural.json", CompactGameToJson(UnnaturalGame()).dump());
  CHECK(Cli({"nash", game}).code == kExitOk);
  const std::string one =
      s.Write("one.json", R"({"c1": [1, 0, 0], "c2": [1, 0, 0], "c3": [1, 0, 0]})");
  const Run v = Cli({"--utility", "ind", "verify", game, one});
  REQUIRE(v.code == kExitOk);
  CHECK(ParseJsonText(v.out)["status"] == "equilibrium");
}

TEST_CASE("contract failure on the max game") {
  Scratch s;
  const std::string game = s.Write("max.json", CompactGameToJson(MaxGame()).dump());
  CHECK(Cli({"--utility", "max", "--victory-weight", "4", "nash", game}).code == kExitContract);
}

TEST_CASE("oracle") {
  Scratch s;
  const std::string game = s.Write("split.json", CompactGameToJson(SplitGame()).dump());
  const std::string idle = s.Write("idle.json", R"({"c1": [0, 1, 0], "c2": [0, 0, 0], "c3": [0, 0, 0]})");
  const Run r = Cli({"--utility", "ind", "--grid", "2", "oracle", game, idle, "--mode",
                     "best-response", "--responder", "c1"});
  REQUIRE(r.code == kExitOk);
  CHECK(ParseJsonText(r.out)["value"] == "1/3");
}

TEST_CASE("bad flags") {
  CHECK(Cli({}).code == kExitInvalid);
  CHECK(Cli({"--utility", "sum", "nash", "-"}, "{}").code == kExitInvalid);
  CHECK(Cli({"--grid", "0", "counterexamples"}).code == kExitInvalid);
  CHECK(Cli({"counterexamples", "nope"}).code == kExitInvalid);
  CHECK(Cli({"validate", "/nonexistent/game.json"}).code == kExitInvalid);
  CHECK(Cli({"validate", "-"}, "{\"candidates\": [1.5]}").code == kExitInvalid);
}

TEST_CASE("counterexample suite") {
  const Run r = Cli({"counterexamples", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.err == "PASS split\nPASS plus\nPASS max\nPASS unnatural\n");
}

}  // namespace
}  // namespace priming
