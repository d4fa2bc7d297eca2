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

#include "priming/rational.h"

#include <cctype>

namespace priming {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

[[noreturn]] void Reject(std::string_view text) {
  throw InputError("not an exact rational literal: \"" + std::string(text) +
                   "\"");
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) Reject(text);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    result = Rational(mpz_class(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) Reject(text);
    if (!whole.empty() && !AllDigits(whole)) Reject(text);
    if (!frac.empty() && !AllDigits(frac)) Reject(text);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    mpz_class w = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class f = frac.empty() ? mpz_class(0) : mpz_class(std::string(frac), 10);
    result = Rational(w * scale + f, scale);
  } else {
    if (!AllDigits(body)) Reject(text);
    result = Rational(mpz_class(std::string(body), 10));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string ToString(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str(10);
}

double ToDouble(const Rational& value) { return value.get_d(); }

Rational Dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) {
    throw InvariantBreach("dot product of vectors with different lengths");
  }
  Rational total = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) total += a[i] * b[i];
  }
  return total;
}

Rational Sum(std::span<const Rational> values) {
  Rational total = 0;
  for (const Rational& v : values) total += v;
  return total;
}

int Sign(const Rational& value) { return sgn(value); }

}  // namespace priming
