#include <doctest.h>

#include "priming/equilibrium.h"
#include "priming/feasibility.h"
#include "test_support.h"

namespace priming {
namespace {

using testing::Q;

// One variable x.
LinearSystem OneVar() {
  LinearSystem s;
  s.AddVariable("x");
  return s;
}

bool Satisfies(const LinearSystem& s, const RationalVector& x) {
  for (const auto& row : s.equalities) {
    if (Dot(row.coeffs, x) != row.rhs) return false;
  }
  for (const auto& row : s.inequalities) {
    if (Dot(row.coeffs, x) < row.rhs) return false;
  }
  return true;
}

LinearSystem RandomSystem(testing::Rng& rng, size_t n, size_t rows, size_t eqs) {
  LinearSystem s;
  for (size_t k = 0; k < n; ++k) s.AddVariable("x" + std::to_string(k));
  auto coeff = [&] {
    return Q(static_cast<long>(testing::Uniform(rng, 0, 8)) - 4,
             static_cast<long>(testing::Uniform(rng, 1, 3)));
  };
  for (size_t r = 0; r < rows + eqs; ++r) {
    RationalVector a(n);
    for (auto& v : a) v = coeff();
    const Rational b = coeff();
    if (r < eqs) {
      s.AddEquality(std::move(a), b);
    } else {
      s.AddInequality(std::move(a), b);
    }
  }
  return s;
}

TEST_CASE("forced point") {
  LinearSystem s = OneVar();
  s.AddEquality({1}, 1);
  s.AddNonNegativity();
  const FeasibilityResult r = SolveFeasibility(s);
  REQUIRE(r.feasible);
  CHECK(r.point == RationalVector{1});
}

TEST_CASE("contradiction comes with a certificate") {
  LinearSystem s = OneVar();
  s.AddInequality({1}, 1);
  s.AddInequality({-1}, 0);
  for (SolveMethod m : {SolveMethod::kSimplex, SolveMethod::kFourierMotzkin}) {
    const FeasibilityResult r = SolveFeasibility(s, m);
    CHECK_FALSE(r.feasible);
    REQUIRE(r.farkas);
    CHECK(VerifyFarkas(s, *r.farkas));
  }
}

TEST_CASE("bogus certificates are refused") {
  LinearSystem s = OneVar();
  s.AddInequality({1}, 1);
  s.AddInequality({-1}, 0);
  CHECK_FALSE(VerifyFarkas(s, {{}, {1, 2}}));
  CHECK_FALSE(VerifyFarkas(s, {{}, {-1, -1}}));
  CHECK_FALSE(VerifyFarkas(s, {{}, {1}}));
  CHECK(VerifyFarkas(s, {{}, {3, 3}}));
}

TEST_CASE("malformed rows and strict rows are refused") {
  LinearSystem s = OneVar();
  s.AddInequality({1, 2}, 0);
  CHECK(s.Malformed());
  CHECK_THROWS_AS(SolveFeasibility(s), InputError);
  LinearSystem t = OneVar();
  t.AddStrict({1}, 0);
  CHECK_THROWS_AS(SolveFeasibility(t), InputError);
}

TEST_CASE("support system for the mirrored two-issue game") {
  const AggregatedGame g({"c1", "c2"}, {"1", "2"}, {{0, 2, 1}, {0, 1, 2}}, {1, 1});
  const LinearSystem s = BuildSupportSystem(g, {{1}, {2}});
  const FeasibilityResult r = SolveFeasibility(s);
  REQUIRE(r.feasible);
  CHECK(r.point == RationalVector{1, 1});
  CHECK(Satisfies(s, {1, 1}));
  // Both on issue 1: c2 would rather move.
  CHECK_FALSE(SolveFeasibility(BuildSupportSystem(g, {{1}, {1}})).feasible);
}

TEST_CASE("Fourier-Motzkin and simplex agree") {
  testing::Rng rng(41);
  int feasible = 0;
  for (int t = 0; t < 300; ++t) {
    const size_t n = testing::Uniform(rng, 1, 5);
    const LinearSystem s =
        RandomSystem(rng, n, testing::Uniform(rng, 1, 8), testing::Uniform(rng, 0, 2));
    const FeasibilityResult a = SolveFeasibility(s, SolveMethod::kSimplex);
    const FeasibilityResult b = SolveFeasibility(s, SolveMethod::kFourierMotzkin);
    REQUIRE(a.feasible == b.feasible);
    for (const FeasibilityResult* r : {&a, &b}) {
      if (r->feasible) {
        CHECK(Satisfies(s, r->point));
      } else {
        REQUIRE(r->farkas);
        CHECK(VerifyFarkas(s, *r->farkas));
      }
    }
    feasible += a.feasible;
  }
  // Both outcomes should be exercised.
  CHECK(feasible > 30);
  CHECK(feasible < 270);
}

TEST_CASE("linear optimum over the simplex is the best vertex") {
  testing::Rng rng(42);
  for (int t = 0; t < 100; ++t) {
    const size_t n = testing::Uniform(rng, 2, 5);
    LinearSystem s;
    for (size_t k = 0; k < n; ++k) s.AddVariable("x" + std::to_string(k));
    s.AddEquality(RationalVector(n, Rational(1)), 1);
    s.AddNonNegativity();
    AffineForm f{RationalVector(n), testing::RandomRational(rng)};
    for (auto& v : f.coeffs) v = testing::RandomRational(rng) - 10;
    const OptimizationResult r = MaximizeLinear(f, s);
    REQUIRE(r.status == OptimizationStatus::kOptimal);
    Rational best = f.coeffs[0];
    for (const auto& v : f.coeffs) best = std::max(best, v);
    CHECK(r.value == best + f.constant);
    CHECK(f.Evaluate(r.point) == r.value);
  }
}

TEST_CASE("unbounded and infeasible objectives") {
  LinearSystem s = OneVar();
  s.AddNonNegativity();
  CHECK(MaximizeLinear({{1}, 0}, s).status == OptimizationStatus::kUnbounded);
  CHECK(MaximizeLinear({{-1}, 0}, s).value == 0);
  s.AddInequality({-1}, 1);
  CHECK(MaximizeLinear({{1}, 0}, s).status == OptimizationStatus::kInfeasible);
  CHECK(ToString(OptimizationStatus::kUnbounded) == "unbounded");
}

// 10 / (28 - 7x) over 0 <= x <= hi.
OptimizationResult PlusShare(const Rational& hi) {
  LinearSystem s = OneVar();
  s.AddNonNegativity();
  s.AddInequality({-1}, -hi);
  return MaximizeLinearFractional({{{0}, 10}, {{-7}, 28}}, s);
}

TEST_CASE("linear-fractional maxima") {
  const OptimizationResult whole = PlusShare(1);
  REQUIRE(whole.status == OptimizationStatus::kOptimal);
  CHECK(whole.value == Q(10, 21));
  CHECK(whole.point == RationalVector{1});
  const OptimizationResult half = PlusShare(Q(1, 2));
  REQUIRE(half.status == OptimizationStatus::kOptimal);
  CHECK(half.value == Q(20, 49));
  CHECK(half.point == RationalVector{Q(1, 2)});
}

TEST_CASE("constant fractional objective") {
  LinearSystem s = OneVar();
  s.AddNonNegativity();
  s.AddInequality({-1}, -3);
  const OptimizationResult r = MaximizeLinearFractional({{{0}, 6}, {{0}, 4}}, s);
  REQUIRE(r.status == OptimizationStatus::kOptimal);
  CHECK(r.value == Q(3, 2));
}

TEST_CASE("fractional optimum matches a fine grid") {
  testing::Rng rng(43);
  for (int t = 0; t < 50; ++t) {
    LinearSystem s;
    s.AddVariable("x");
    s.AddVariable("y");
    s.AddEquality({1, 1}, 1);
    s.AddNonNegativity();
    FractionalObjective f{{{testing::RandomRational(rng), testing::RandomRational(rng)},
                           testing::RandomRational(rng)},
                          {{testing::RandomRational(rng) + 1, testing::RandomRational(rng) + 1},
                           testing::RandomRational(rng)}};
    const OptimizationResult r = MaximizeLinearFractional(f, s);
    REQUIRE(r.status == OptimizationStatus::kOptimal);
    // A linear-fractional function on a segment peaks at an endpoint.
    Rational best = -1;
    for (int k = 0; k <= 20; ++k) {
      const RationalVector p = {Q(k, 20), 1 - Q(k, 20)};
      const Rational v = f.numerator.Evaluate(p) / f.denominator.Evaluate(p);
      CHECK(v <= r.value);
      best = std::max(best, v);
    }
    CHECK(best == r.value);
  }
}

TEST_CASE("strict rows") {
  const std::vector<LinearRow> below_half = {{{-1}, Q(-1, 2)}};  // x < 1/2
  CHECK_FALSE(CheckStrict(RationalVector{Q(1, 2)}, below_half));
  CHECK(CheckStrict(RationalVector{Q(49, 100)}, below_half));
}

TEST_CASE("strict point search") {
  LinearSystem s = OneVar();
  s.AddNonNegativity();
  s.AddStrict({-1}, Q(-1, 2));
  StrictPointResult r = FindStrictPoint(s);
  CHECK(r.strict_feasible);
  CHECK(CheckStrict(r.point, s.strict));
  CHECK(r.slack > 0);

  // Closure {x = 1/2} is nonempty, the open part is not.
  s.AddInequality({1}, Q(1, 2));
  r = FindStrictPoint(s);
  CHECK(r.closure_feasible);
  CHECK_FALSE(r.strict_feasible);

  s.AddInequality({1}, 1);
  CHECK_FALSE(FindStrictPoint(s).closure_feasible);
}

}  // namespace
}  // namespace priming
