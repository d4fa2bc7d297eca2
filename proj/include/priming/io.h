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

// JSON reading and writing. Rationals travel as strings ("3/4", "-2") or
// JSON integers; JSON floating-point numbers are refused. Objects are
// emitted with sorted keys, so identical inputs give identical bytes.

#ifndef PRIMING_IO_H_
#define PRIMING_IO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "priming/engine.h"
#include "priming/equilibrium.h"
#include "priming/model.h"
#include "priming/response.h"

namespace priming {

using Json = nlohmann::json;

Rational RationalFromJson(const Json& value, std::string_view where);
Json RationalToJson(const Rational& value);
Json VectorToJson(const RationalVector& values);

// Parses text; syntax errors become InputError.
Json ParseJsonText(std::string_view text);

// True when the document uses the compact `ranks` form.
bool IsCompactGame(const Json& doc);

ElectionInstance InstanceFromJson(const Json& doc);
Json InstanceToJson(const ElectionInstance& instance);

AggregatedGame CompactGameFromJson(const Json& doc);
Json CompactGameToJson(const AggregatedGame& game);

// A game file in either form. `instance` is set for voter-level input.
struct LoadedGame {
  std::optional<ElectionInstance> instance;
  AggregatedGame game;
};
LoadedGame LoadGame(const Json& doc);

// {"investments": {candidate: [amounts]}}. Arrays carry every issue, slack
// first; arrays over user issues only get the unspent budget on the slack
// issue. Also accepts the bare map without the "investments" wrapper.
Profile ProfileFromJson(const AggregatedGame& game, const Json& doc);
Json ProfileToJson(const AggregatedGame& game, const Profile& profile);
Json InvestmentToJson(const Investment& investment);

// {"mixed": {candidate: [{"probability": p, "investment": [...]}, ...]}}
MixedProfile MixedProfileFromJson(const AggregatedGame& game, const Json& doc);

Json ViolationsToJson(const std::vector<Violation>& violations);
Json PayoffsToJson(const AggregatedGame& game, const PayoffVector& payoffs);
Json ReportToJson(const AggregatedGame& game, const BestResponseReport& report);
Json CertificateToJson(const AggregatedGame& game, const EquilibriumCertificate& cert);

// FNV-1a, 64 bit, as 16 lowercase hex digits.
std::string Digest(std::string_view bytes);

}  // namespace priming

#endif  // PRIMING_IO_H_
