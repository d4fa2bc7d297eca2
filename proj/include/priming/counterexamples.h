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

// The four small games behind the non-existence and oddity results, with a
// scripted check of each expected outcome. All use slack ranks 0, so the
// slack issue is inert and strategies live on the user issues.

#ifndef PRIMING_COUNTEREXAMPLES_H_
#define PRIMING_COUNTEREXAMPLES_H_

#include <string>
#include <vector>

#include "priming/model.h"

namespace priming {

// c1=(1,1), c2=(2,0), c3=(0,2); budgets (1,0,0).
AggregatedGame SplitGame();
// c1=(10,10), c2=(0,9), c3=(11,9); budgets (1,0,0).
AggregatedGame PlusGame();
// c1=(1,1), c2=(1,1-e), c3=(1-e,1+e), c4=(1,0); budgets (1,1,0,0).
AggregatedGame MaxGame(const Rational& e = Rational(1, 10));
// Identity ranks over three issues; budgets (1,1,1).
AggregatedGame UnnaturalGame();

struct ScriptedCheck {
  std::string description;
  bool passed = false;
  std::string detail;
};

struct CounterexampleResult {
  std::string name;
  std::vector<ScriptedCheck> checks;

  bool passed() const;
};

// "split", "plus", "max", "unnatural".
const std::vector<std::string>& CounterexampleNames();

// Throws InputError for an unknown name.
CounterexampleResult RunCounterexample(const std::string& name);

}  // namespace priming

#endif  // PRIMING_COUNTEREXAMPLES_H_
