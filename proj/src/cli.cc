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

#include "priming/cli.h"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "priming/counterexamples.h"
#include "priming/equilibrium.h"
#include "priming/io.h"
#include "priming/oracle.h"
#include "priming/response.h"

namespace priming {
namespace {

struct GlobalOptions {
  std::string utility = "frac";
  std::string victory_weight;
  std::string epsilon;
  size_t grid = 10;
  std::string output = "json";
};

struct Input {
  std::string text;
  Json doc;
};

class Session {
 public:
  Session(std::istream& in, std::ostream& out, std::ostream& err)
      : in_(in), out_(out), err_(err) {}

  GlobalOptions options;

  Input Read(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (stdin_used_) throw InputError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream buf;
      buf << in_.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw InputError("cannot read \"" + path + "\"");
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    digest_input_ += text;
    return {text, ParseJsonText(text)};
  }

  UtilityKind Kind(size_t num_candidates) const {
    const Rational v = options.victory_weight.empty()
                           ? Rational(num_candidates)
                           : ParseRational(options.victory_weight);
    UtilityKind kind = UtilityKind::FromName(options.utility, v);
    kind.Validate(num_candidates);
    return kind;
  }

  Rational Epsilon(const Rational& fallback) const {
    if (options.epsilon.empty()) return fallback;
    return ParseRational(options.epsilon);
  }

  void RequireJson(const std::string& command) const {
    if (options.output != "json") {
      throw InputError("--output csv is only available for eval, not " + command);
    }
  }

  // Emits `result` with the command name and input digest merged in.
  void Emit(const std::string& command, Json result) {
    result["command"] = command;
    result["input_digest"] = Digest(digest_input_);
    out_ << result.dump(2) << "\n";
  }

  std::ostream& out() { return out_; }
  std::ostream& err() { return err_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  bool stdin_used_ = false;
  std::string digest_input_;
};

size_t FindCandidate(const AggregatedGame& game, const std::string& name) {
  for (size_t c = 0; c < game.num_candidates(); ++c) {
    if (game.candidates()[c] == name) return c;
  }
  throw InputError("unknown responder \"" + name + "\"");
}

int CmdValidate(Session& s, const std::string& path) {
  s.RequireJson("validate");
  Input input = s.Read(path);
  Json result;
  if (IsCompactGame(input.doc)) {
    CompactGameFromJson(input.doc);
    result = {{"form", "compact"}, {"valid", true}, {"violations", Json::array()}};
  } else {
    const std::vector<Violation> violations = ValidateInstance(InstanceFromJson(input.doc));
    result = {{"form", "instance"},
              {"valid", violations.empty()},
              {"violations", ViolationsToJson(violations)}};
    if (!violations.empty()) {
      s.Emit("validate", result);
      for (const Violation& v : violations) s.err() << "violation: " << v.message << "\n";
      return kExitInvalid;
    }
  }
  s.Emit("validate", result);
  return kExitOk;
}

int CmdAggregate(Session& s, const std::string& path) {
  s.RequireJson("aggregate");
  Input input = s.Read(path);
  LoadedGame loaded = LoadGame(input.doc);
  s.Emit("aggregate", CompactGameToJson(loaded.game));
  return kExitOk;
}

int CmdEval(Session& s, const std::string& game_path, const std::string& profile_path) {
  const AggregatedGame game = LoadGame(s.Read(game_path).doc).game;
  const Json doc = s.Read(profile_path).doc;
  const UtilityKind kind = s.Kind(game.num_candidates());
  const bool csv = s.options.output == "csv";
  if (s.options.output != "json" && !csv) {
    throw InputError("--output must be json or csv");
  }
  if (doc.is_object() && doc.contains("mixed")) {
    MixedProfile mixed = MixedProfileFromJson(game, doc);
    PayoffVector expected(game.num_candidates());
    for (size_t c = 0; c < expected.size(); ++c) {
      expected[c] = ExpectedUtility(game, mixed, kind, c);
    }
    if (csv) {
      s.out() << "candidate,expected_payoff\n";
      for (size_t c = 0; c < expected.size(); ++c) {
        s.out() << game.candidates()[c] << "," << ToString(expected[c]) << "\n";
      }
      return kExitOk;
    }
    s.Emit("eval", {{"utility", kind.name()}, {"expected_payoffs", PayoffsToJson(game, expected)}});
    return kExitOk;
  }
  const Profile profile = ProfileFromJson(game, doc);
  RequireValidProfile(game, profile);
  const RationalVector votes = Votes(game, profile);
  const RationalVector shares = VoteShare(game, profile);
  const RationalVector victory = Victory(game, profile);
  const PayoffVector payoffs = Utility(game, profile, kind);
  if (csv) {
    s.out() << "candidate,votes,share,victory,payoff\n";
    for (size_t c = 0; c < payoffs.size(); ++c) {
      s.out() << game.candidates()[c] << "," << ToString(votes[c]) << "," << ToString(shares[c])
              << "," << ToString(victory[c]) << "," << ToString(payoffs[c]) << "\n";
    }
    return kExitOk;
  }
  Json result = {{"utility", kind.name()},
                 {"votes", PayoffsToJson(game, votes)},
                 {"shares", PayoffsToJson(game, shares)},
                 {"victory", PayoffsToJson(game, victory)},
                 {"payoffs", PayoffsToJson(game, payoffs)}};
  if (kind.uses_victory_weight()) result["victory_weight"] = RationalToJson(kind.victory_weight());
  s.Emit("eval", result);
  return kExitOk;
}

int CmdBestResponse(Session& s, const std::string& game_path, const std::string& profile_path,
                    const std::string& responder) {
  s.RequireJson("best-response");
  const AggregatedGame game = LoadGame(s.Read(game_path).doc).game;
  const Profile profile = ProfileFromJson(game, s.Read(profile_path).doc);
  RequireValidProfile(game, profile);
  const UtilityKind kind = s.Kind(game.num_candidates());
  const Rational eps = s.Epsilon(Rational(1, 1000));
  const size_t c = FindCandidate(game, responder);
  BestResponseReport report = BestResponse(game, c, profile.TotalExcluding(c), kind, eps);
  Json result = ReportToJson(game, report);
  if (kind.tag() == UtilityKind::Tag::kPlus) result["epsilon"] = RationalToJson(eps);
  s.Emit("best-response", result);
  return kExitOk;
}

int CmdNash(Session& s, const std::string& game_path, std::string algorithm,
            size_t max_rounds, const std::string& start_path) {
  s.RequireJson("nash");
  const AggregatedGame game = LoadGame(s.Read(game_path).doc).game;
  const UtilityKind kind = s.Kind(game.num_candidates());
  std::optional<Profile> start;
  if (!start_path.empty()) start = ProfileFromJson(game, s.Read(start_path).doc);

  if (kind.tag() == UtilityKind::Tag::kMax && game == MaxGame()) {
    s.err() << "no pure equilibrium: the bundled max counterexample certifies nonexistence\n";
    return kExitContract;
  }
  if (algorithm == "auto") {
    if (game.num_candidates() == 2) {
      algorithm = "two-candidate";
    } else {
      algorithm = kind.tag() == UtilityKind::Tag::kFrac ? "general" : "dynamics";
    }
  }
  EquilibriumCertificate cert;
  if (algorithm == "general") {
    if (kind.tag() != UtilityKind::Tag::kFrac) {
      throw InputError("the general algorithm computes frac equilibria only");
    }
    cert = NashFracGeneral(game);
  } else if (algorithm == "two-candidate") {
    cert = NashTwoCandidates(game, kind);
  } else if (algorithm == "dynamics") {
    cert = BestResponseDynamics(game, kind, start, max_rounds);
  } else {
    throw InputError("unknown algorithm \"" + algorithm + "\"");
  }
  s.Emit("nash", CertificateToJson(game, cert));
  return cert.status == CertificateStatus::kNotEquilibrium ? kExitInternal : kExitOk;
}

int CmdVerify(Session& s, const std::string& game_path, const std::string& profile_path) {
  s.RequireJson("verify");
  const AggregatedGame game = LoadGame(s.Read(game_path).doc).game;
  const Profile profile = ProfileFromJson(game, s.Read(profile_path).doc);
  const UtilityKind kind = s.Kind(game.num_candidates());
  s.Emit("verify", CertificateToJson(game, VerifyEquilibrium(game, profile, kind)));
  return kExitOk;
}

int CmdOracle(Session& s, const std::string& game_path, const std::string& profile_path,
              const std::string& mode, const std::string& responder) {
  s.RequireJson("oracle");
  const AggregatedGame game = LoadGame(s.Read(game_path).doc).game;
  const UtilityKind kind = s.Kind(game.num_candidates());
  const size_t k = s.options.grid;
  Json result = {{"utility", kind.name()}, {"grid", k}, {"mode", mode}};
  if (mode == "best-response") {
    if (profile_path.empty()) throw InputError("oracle best-response needs a profile");
    const Profile profile = ProfileFromJson(game, s.Read(profile_path).doc);
    RequireValidProfile(game, profile);
    const size_t c = FindCandidate(game, responder);
    GridBestResponse best =
        BruteForceBestResponse(game, c, profile.TotalExcluding(c), kind, k);
    result["responder"] = game.candidates()[c];
    result["witness"] = InvestmentToJson(best.witness);
    result["value"] = RationalToJson(best.value);
    result["evaluations"] = best.evaluations;
  } else if (mode == "equilibria") {
    const Rational eps = s.Epsilon(Rational(0));
    std::vector<Profile> found = BruteForceEpsilonEquilibria(game, kind, k, eps);
    Json profiles = Json::array();
    for (const Profile& p : found) profiles.push_back(ProfileToJson(game, p)["investments"]);
    result["epsilon"] = RationalToJson(eps);
    result["count"] = found.size();
    result["profiles"] = profiles;
  } else {
    throw InputError("unknown oracle mode \"" + mode + "\"");
  }
  s.Emit("oracle", result);
  return kExitOk;
}

int CmdCounterexamples(Session& s, const std::string& name) {
  s.RequireJson("counterexamples");
  std::vector<std::string> names;
  if (name == "all") {
    names = CounterexampleNames();
  } else {
    names.push_back(name);
  }
  Json cases = Json::array();
  bool all_passed = true;
  for (const std::string& n : names) {
    CounterexampleResult r = RunCounterexample(n);
    Json checks = Json::array();
    for (const ScriptedCheck& c : r.checks) {
      checks.push_back({{"description", c.description}, {"passed", c.passed}, {"detail", c.detail}});
    }
    cases.push_back({{"name", r.name}, {"passed", r.passed()}, {"checks", checks}});
    s.err() << (r.passed() ? "PASS " : "FAIL ") << r.name << "\n";
    all_passed = all_passed && r.passed();
  }
  s.Emit("counterexamples", {{"cases", cases}, {"passed", all_passed}});
  return all_passed ? kExitOk : kExitContract;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
           std::ostream& err) {
  Session session(in, out, err);
  CLI::App app{"Issue-priming campaign game solver", "priming"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions& o = session.options;
  app.add_option("--utility", o.utility, "frac, ind, plus or max")
      ->check(CLI::IsMember({"frac", "ind", "plus", "max"}));
  app.add_option("--victory-weight", o.victory_weight, "V for plus and max (default |C|)");
  app.add_option("--epsilon", o.epsilon, "tolerance for plus witnesses and the oracle");
  app.add_option("--grid", o.grid, "grid resolution k")->check(CLI::PositiveNumber);
  app.add_option("--output", o.output, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  std::function<int()> action;
  std::string game_path, profile_path, responder, algorithm = "auto", start_path;
  std::string mode = "best-response", name = "all";
  size_t max_rounds = 100;

  auto* validate = app.add_subcommand("validate", "check an instance file");
  validate->add_option("game", game_path)->required();
  validate->callback([&] { action = [&] { return CmdValidate(session, game_path); }; });

  auto* aggregate = app.add_subcommand("aggregate", "emit the compact ranks form");
  aggregate->add_option("game", game_path)->required();
  aggregate->callback([&] { action = [&] { return CmdAggregate(session, game_path); }; });

  auto* eval = app.add_subcommand("eval", "votes, shares and payoffs of a profile");
  eval->add_option("game", game_path)->required();
  eval->add_option("profile", profile_path)->required();
  eval->callback([&] { action = [&] { return CmdEval(session, game_path, profile_path); }; });

  auto* br = app.add_subcommand("best-response", "best response of one candidate");
  br->add_option("game", game_path)->required();
  br->add_option("profile", profile_path, "opponents' investments")->required();
  br->add_option("--responder", responder)->required();
  br->callback([&] {
    action = [&] { return CmdBestResponse(session, game_path, profile_path, responder); };
  });

  auto* nash = app.add_subcommand("nash", "compute an equilibrium");
  nash->add_option("game", game_path)->required();
  nash->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"auto", "general", "two-candidate", "dynamics"}));
  nash->add_option("--max-rounds", max_rounds)->check(CLI::PositiveNumber);
  nash->add_option("--start", start_path, "starting profile for dynamics");
  nash->callback([&] {
    action = [&] { return CmdNash(session, game_path, algorithm, max_rounds, start_path); };
  });

  auto* verify = app.add_subcommand("verify", "check a profile for improving deviations");
  verify->add_option("game", game_path)->required();
  verify->add_option("profile", profile_path)->required();
  verify->callback([&] { action = [&] { return CmdVerify(session, game_path, profile_path); }; });

  auto* oracle = app.add_subcommand("oracle", "exhaustive grid search");
  oracle->add_option("game", game_path)->required();
  oracle->add_option("profile", profile_path);
  oracle->add_option("--mode", mode)->check(CLI::IsMember({"best-response", "equilibria"}));
  oracle->add_option("--responder", responder);
  oracle->callback([&] {
    action = [&] { return CmdOracle(session, game_path, profile_path, mode, responder); };
  });

  auto* cx = app.add_subcommand("counterexamples", "run the bundled counterexample checks");
  cx->add_option("name", name, "split, plus, max, unnatural or all");
  cx->callback([&] { action = [&] { return CmdCounterexamples(session, name); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "priming: error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvariantBreach& e) {
    err << "priming: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace priming
