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

#ifndef PRIMING_RATIONAL_H_
#define PRIMING_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace priming {

// Arbitrary-precision rational, always kept in canonical form.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// Bad user input or a violated operation precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal invariant did not hold. Reaching one of these is a bug.
class InvariantBreach : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Accepts "p/q", integers and finite decimals ("0.25"). Anything that is not
// an exact rational literal is rejected with InputError.
Rational ParseRational(std::string_view text);

// Lowest terms, sign on the numerator, "/q" omitted for integers.
std::string ToString(const Rational& value);

double ToDouble(const Rational& value);

Rational Dot(std::span<const Rational> a, std::span<const Rational> b);
Rational Sum(std::span<const Rational> values);
int Sign(const Rational& value);

}  // namespace priming

#endif  // PRIMING_RATIONAL_H_
