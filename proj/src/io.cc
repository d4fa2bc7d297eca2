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

#include "priming/io.h"

#include <algorithm>
#include <cstdio>
#include <map>

namespace priming {

Rational RationalFromJson(const Json& value, std::string_view where) {
  if (value.is_string()) {
    try {
      return ParseRational(value.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(std::string(where) + ": " + e.what());
    }
  }
  if (value.is_number_integer()) return ParseRational(value.dump());
  if (value.is_number_float()) {
    throw InputError(std::string(where) + ": floating-point number " + value.dump() +
                     " is not exact; write it as a string such as \"1/10\"");
  }
  throw InputError(std::string(where) + ": expected a rational, got " +
                   std::string(value.type_name()));
}

Json RationalToJson(const Rational& value) { return ToString(value); }

Json VectorToJson(const RationalVector& values) {
  Json out = Json::array();
  for (const Rational& v : values) out.push_back(RationalToJson(v));
  return out;
}

Json ParseJsonText(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

const Json& Field(const Json& doc, const char* key, std::string_view where) {
  if (!doc.is_object()) throw InputError(std::string(where) + ": expected an object");
  auto it = doc.find(key);
  if (it == doc.end()) {
    throw InputError(std::string(where) + ": missing field \"" + key + "\"");
  }
  return *it;
}

std::vector<std::string> Names(const Json& value, std::string_view where) {
  if (!value.is_array()) throw InputError(std::string(where) + ": expected an array of names");
  std::vector<std::string> out;
  for (const Json& v : value) {
    if (!v.is_string()) throw InputError(std::string(where) + ": names must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

RationalVector Rationals(const Json& value, const std::string& where) {
  if (!value.is_array()) throw InputError(where + ": expected an array");
  RationalVector out;
  for (size_t k = 0; k < value.size(); ++k) {
    out.push_back(RationalFromJson(value[k], where + "[" + std::to_string(k) + "]"));
  }
  return out;
}

size_t CandidateIndex(const AggregatedGame& game, const std::string& name) {
  for (size_t c = 0; c < game.num_candidates(); ++c) {
    if (game.candidates()[c] == name) return c;
  }
  throw InputError("unknown candidate \"" + name + "\"");
}

// Every candidate exactly once, keyed by name.
template <typename T, typename F>
std::vector<T> PerCandidate(const AggregatedGame& game, const Json& map,
                            std::string_view where, F parse) {
  if (!map.is_object()) throw InputError(std::string(where) + ": expected an object");
  std::vector<std::optional<T>> slots(game.num_candidates());
  for (const auto& [name, value] : map.items()) {
    const size_t c = CandidateIndex(game, name);
    slots[c] = parse(value, c, std::string(where) + "." + name);
  }
  std::vector<T> out;
  for (size_t c = 0; c < slots.size(); ++c) {
    if (!slots[c]) {
      throw InputError(std::string(where) + ": missing candidate \"" +
                       game.candidates()[c] + "\"");
    }
    out.push_back(std::move(*slots[c]));
  }
  return out;
}

Investment InvestmentFromJson(const AggregatedGame& game, size_t c, const Json& value,
                              const std::string& where) {
  RationalVector amounts = Rationals(value, where);
  if (amounts.size() + 1 == game.num_issues()) {
    Rational rest = game.budget(c) - Sum(amounts);
    amounts.insert(amounts.begin(), rest);
  } else if (amounts.size() != game.num_issues()) {
    throw InputError(where + ": expected " + std::to_string(game.num_issues()) +
                     " amounts (slack first) or " + std::to_string(game.num_issues() - 1));
  }
  return Investment(std::move(amounts));
}

}  // namespace

bool IsCompactGame(const Json& doc) { return doc.is_object() && doc.contains("ranks"); }

ElectionInstance InstanceFromJson(const Json& doc) {
  ElectionInstance inst;
  inst.candidates = Names(Field(doc, "candidates", "instance"), "candidates");
  inst.issues = Names(Field(doc, "issues", "instance"), "issues");
  inst.elasticities = Rationals(Field(doc, "rho", "instance"), "rho");
  inst.budgets = Rationals(Field(doc, "budgets", "instance"), "budgets");
  const Json& voters = Field(doc, "voters", "instance");
  if (!voters.is_array()) throw InputError("voters: expected an array");
  for (size_t v = 0; v < voters.size(); ++v) {
    const std::string where = "voters[" + std::to_string(v) + "]";
    VoterRecord rec;
    const Json& quality = Field(voters[v], "quality", where);
    if (!quality.is_object()) throw InputError(where + ".quality: expected an object");
    for (const std::string& name : inst.candidates) {
      auto it = quality.find(name);
      if (it == quality.end()) {
        throw InputError(where + ".quality: missing candidate \"" + name + "\"");
      }
      rec.quality.push_back(Rationals(*it, where + ".quality." + name));
    }
    for (const auto& [name, value] : quality.items()) {
      if (std::find(inst.candidates.begin(), inst.candidates.end(), name) ==
          inst.candidates.end()) {
        throw InputError(where + ".quality: unknown candidate \"" + name + "\"");
      }
    }
    rec.salience0 = Rationals(Field(voters[v], "salience0", where), where + ".salience0");
    inst.voters.push_back(std::move(rec));
  }
  return inst;
}

Json InstanceToJson(const ElectionInstance& instance) {
  Json voters = Json::array();
  for (const VoterRecord& rec : instance.voters) {
    Json quality = Json::object();
    for (size_t c = 0; c < instance.candidates.size() && c < rec.quality.size(); ++c) {
      quality[instance.candidates[c]] = VectorToJson(rec.quality[c]);
    }
    voters.push_back({{"quality", quality}, {"salience0", VectorToJson(rec.salience0)}});
  }
  return {{"candidates", instance.candidates},
          {"issues", instance.issues},
          {"rho", VectorToJson(instance.elasticities)},
          {"budgets", VectorToJson(instance.budgets)},
          {"voters", voters}};
}

AggregatedGame CompactGameFromJson(const Json& doc) {
  std::vector<std::string> candidates =
      Names(Field(doc, "candidates", "game"), "candidates");
  std::vector<std::string> issues = Names(Field(doc, "issues", "game"), "issues");
  RationalVector budgets = Rationals(Field(doc, "budgets", "game"), "budgets");
  const Json& ranks = Field(doc, "ranks", "game");
  if (!ranks.is_object()) throw InputError("ranks: expected an object");
  std::vector<RationalVector> rows;
  for (const std::string& name : candidates) {
    auto it = ranks.find(name);
    if (it == ranks.end()) throw InputError("ranks: missing candidate \"" + name + "\"");
    rows.push_back(Rationals(*it, "ranks." + name));
  }
  if (ranks.size() != candidates.size()) throw InputError("ranks: unknown candidate entry");
  return AggregatedGame(std::move(candidates), std::move(issues), std::move(rows),
                        std::move(budgets));
}

Json CompactGameToJson(const AggregatedGame& game) {
  Json ranks = Json::object();
  for (size_t c = 0; c < game.num_candidates(); ++c) {
    ranks[game.candidates()[c]] = VectorToJson(game.ranks(c));
  }
  return {{"candidates", game.candidates()},
          {"issues", game.issue_names()},
          {"budgets", VectorToJson(game.budgets())},
          {"ranks", ranks}};
}

LoadedGame LoadGame(const Json& doc) {
  if (IsCompactGame(doc)) return LoadedGame{std::nullopt, CompactGameFromJson(doc)};
  ElectionInstance inst = InstanceFromJson(doc);
  AggregatedGame game = Aggregate(inst);
  return LoadedGame{std::move(inst), std::move(game)};
}

Profile ProfileFromJson(const AggregatedGame& game, const Json& doc) {
  const Json& map = doc.is_object() && doc.contains("investments") ? doc["investments"] : doc;
  std::vector<Investment> invs = PerCandidate<Investment>(
      game, map, "investments", [&](const Json& value, size_t c, const std::string& where) {
        return InvestmentFromJson(game, c, value, where);
      });
  return Profile(std::move(invs));
}

Json InvestmentToJson(const Investment& investment) {
  return VectorToJson(investment.amounts());
}

Json ProfileToJson(const AggregatedGame& game, const Profile& profile) {
  Json map = Json::object();
  for (size_t c = 0; c < profile.size(); ++c) {
    map[game.candidates()[c]] = InvestmentToJson(profile[c]);
  }
  return {{"investments", map}};
}

MixedProfile MixedProfileFromJson(const AggregatedGame& game, const Json& doc) {
  const Json& map = Field(doc, "mixed", "mixed profile");
  return PerCandidate<MixedStrategy>(
      game, map, "mixed", [&](const Json& value, size_t c, const std::string& where) {
        if (!value.is_array()) throw InputError(where + ": expected an array");
        MixedStrategy s;
        for (size_t k = 0; k < value.size(); ++k) {
          const std::string at = where + "[" + std::to_string(k) + "]";
          s.probabilities.push_back(
              RationalFromJson(Field(value[k], "probability", at), at + ".probability"));
          s.investments.push_back(
              InvestmentFromJson(game, c, Field(value[k], "investment", at), at));
        }
        return s;
      });
}

Json ViolationsToJson(const std::vector<Violation>& violations) {
  Json out = Json::array();
  for (const Violation& v : violations) {
    Json item = {{"rule", v.rule}, {"message", v.message}};
    if (v.voter) item["voter"] = *v.voter;
    if (v.candidate) item["candidate"] = *v.candidate;
    if (v.issue) item["issue"] = *v.issue;
    out.push_back(std::move(item));
  }
  return out;
}

Json PayoffsToJson(const AggregatedGame& game, const PayoffVector& payoffs) {
  Json out = Json::object();
  for (size_t c = 0; c < payoffs.size(); ++c) {
    out[game.candidates()[c]] = RationalToJson(payoffs[c]);
  }
  return out;
}

Json ReportToJson(const AggregatedGame& game, const BestResponseReport& report) {
  Json issues = Json::array();
  for (size_t i : report.optimal_issues) issues.push_back(game.IssueLabel(i));
  Json out = {{"utility", report.kind.name()},
              {"responder", game.candidates()[report.responder]},
              {"attained", report.attained},
              {"value", RationalToJson(report.value)},
              {"witness", InvestmentToJson(report.witness)},
              {"detail", report.detail}};
  if (report.kind.tag() == UtilityKind::Tag::kFrac) out["optimal_issues"] = issues;
  if (report.kind.uses_victory_weight()) {
    out["victory_weight"] = RationalToJson(report.kind.victory_weight());
  }
  return out;
}

Json CertificateToJson(const AggregatedGame& game, const EquilibriumCertificate& cert) {
  Json supports = Json::object();
  for (size_t c = 0; c < cert.supports.size(); ++c) {
    Json labels = Json::array();
    for (size_t i : cert.supports[c]) labels.push_back(game.IssueLabel(i));
    supports[game.candidates()[c]] = labels;
  }
  Json checks = Json::array();
  for (const DeviationCheck& check : cert.checks) {
    Json item = {{"candidate", game.candidates()[check.candidate]},
                 {"utility", RationalToJson(check.utility)},
                 {"best_deviation_value", RationalToJson(check.best_deviation_value)},
                 {"family", check.family},
                 {"support_indifferent", check.support_indifferent}};
    item["improving_deviation"] =
        check.improving_deviation ? InvestmentToJson(*check.improving_deviation) : Json();
    checks.push_back(std::move(item));
  }
  Json out = {{"status", ToString(cert.status)},
              {"utility", cert.kind.name()},
              {"algorithm", cert.algorithm},
              {"iterations", cert.iterations},
              {"supports", supports},
              {"checks", checks}};
  if (cert.profile.size() == game.num_candidates()) {
    out["profile"] = ProfileToJson(game, cert.profile)["investments"];
  }
  if (!cert.utilities.empty()) out["utilities"] = PayoffsToJson(game, cert.utilities);
  if (cert.kind.uses_victory_weight()) {
    out["victory_weight"] = RationalToJson(cert.kind.victory_weight());
  }
  if (!cert.issue_trace.empty()) {
    Json trace = Json::object();
    for (size_t c = 0; c < cert.issue_trace.size(); ++c) {
      Json seq = Json::array();
      for (size_t i : cert.issue_trace[c]) seq.push_back(game.IssueLabel(i));
      trace[game.candidates()[c]] = seq;
    }
    out["issue_trace"] = trace;
  }
  if (!cert.note.empty()) out["note"] = cert.note;
  return out;
}

std::string Digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char b : bytes) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace priming
