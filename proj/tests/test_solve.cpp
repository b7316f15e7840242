#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ruled/solve.hpp"

using namespace ruled;

static MultiPoly V(Var v) { return MultiPoly::variable(v); }
static MultiPoly C(int n) { return MultiPoly(Scalar(n)); }

static const Scalar& sc(const SolutionPoint& p, Var v) { return solve_value_scalar(p.at(v)); }

TEST_CASE("triangular toy system") {
  // alpha^2 = 1, beta = 0, gamma = 0, delta = 1, k = alpha*delta.
  auto gb = buchberger({V(Var::alpha).pow(2) - C(1), V(Var::beta), V(Var::gamma),
                        V(Var::delta) - C(1), V(Var::k) - V(Var::alpha) * V(Var::delta)});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    CHECK(s.all_scalar());
    CHECK(sc(s, Var::beta) == Scalar(0));
    CHECK(sc(s, Var::delta) == Scalar(1));
    CHECK(sc(s, Var::k) == sc(s, Var::alpha));
    CHECK(sc(s, Var::alpha) * sc(s, Var::alpha) == Scalar(1));
  }
  CHECK_FALSE(sc(sols[0], Var::alpha) == sc(sols[1], Var::alpha));
}

TEST_CASE("irrational coordinates come back exactly") {
  // x^2 = 3, y = x with x=alpha, y=beta ranked above.
  auto gb = buchberger({V(Var::alpha).pow(2) - C(3), V(Var::alpha) - V(Var::beta)});
  auto sols = solve_zero_dim(gb, vars_of(gb), 3);
  REQUIRE(sols.size() == 2);
  Scalar r3 = Scalar::sqrt_of(3);
  bool saw_pos = false, saw_neg = false;
  for (const auto& s : sols) {
    REQUIRE(s.all_scalar());
    CHECK(sc(s, Var::alpha) == sc(s, Var::beta));
    if (sc(s, Var::alpha) == r3) saw_pos = true;
    if (sc(s, Var::alpha) == -r3) saw_neg = true;
  }
  CHECK(saw_pos);
  CHECK(saw_neg);
}

TEST_CASE("ambient field discovered when unspecified") {
  auto gb = buchberger({V(Var::alpha).pow(2) - C(3), V(Var::alpha) - V(Var::beta)});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) CHECK(s.all_scalar());
}

TEST_CASE("complex roots are discarded") {
  // (x^2+1)(x-2) = x^3 - 2x^2 + x - 2: only real root 2.
  auto gb = buchberger({V(Var::alpha).pow(3) - C(2) * V(Var::alpha).pow(2) + V(Var::alpha) - C(2)});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 1);
  CHECK(sc(sols[0], Var::alpha) == Scalar(2));
}

TEST_CASE("products of linear forms match direct enumeration") {
  // x in {1, -2, 5}, y = x^2 exactly once each.
  MultiPoly x = V(Var::alpha), y = V(Var::beta);
  MultiPoly px = (x - C(1)) * (x + C(2)) * (x - C(5));
  auto gb = buchberger({px, y - x * x});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 3);
  std::vector<Scalar> seen;
  for (const auto& s : sols) {
    CHECK(sc(s, Var::beta) == sc(s, Var::alpha) * sc(s, Var::alpha));
    seen.push_back(sc(s, Var::alpha));
  }
  std::sort(seen.begin(), seen.end(), [](const Scalar& a, const Scalar& b) { return a < b; });
  CHECK(seen[0] == Scalar(-2));
  CHECK(seen[1] == Scalar(1));
  CHECK(seen[2] == Scalar(5));
}

TEST_CASE("positive dimension raises with the dimension attached") {
  auto gb = buchberger({V(Var::alpha) * V(Var::beta) - C(1)});
  try {
    solve_zero_dim(gb);
    FAIL("expected dimension_error");
  } catch (const dimension_error& e) {
    CHECK(e.dimension == 1);
  }
}

TEST_CASE("empty variety yields no points") {
  auto gb = buchberger({V(Var::alpha), V(Var::alpha) - C(1)});
  CHECK(solve_zero_dim(gb).empty());
}

TEST_CASE("nonreduced input still verified exactly") {
  // (x-1)^2 = 0, y = x: single solution (1,1) reported once.
  MultiPoly x = V(Var::alpha), y = V(Var::beta);
  auto gb = buchberger({(x - C(1)) * (x - C(1)), y - x});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 1);
  CHECK(sc(sols[0], Var::alpha) == Scalar(1));
  CHECK(sc(sols[0], Var::beta) == Scalar(1));
}

TEST_CASE("two independent quadratics need the separating fallback") {
  // x^2 = 2, y^2 = 3: four real points with coordinates in different fields.
  MultiPoly x = V(Var::alpha), y = V(Var::beta);
  auto gb = buchberger({x * x - C(2), y * y - C(3)});
  auto sols = solve_zero_dim(gb);
  REQUIRE(sols.size() == 4);
  int rational_count = 0;
  for (const auto& s : sols) {
    // x = +-sqrt2, y = +-sqrt3: mixed fields, so at least one coordinate per
    // point is a symbolic algebraic number unless reconstruction found both.
    double xa = solve_value_approx(s.at(Var::alpha));
    double ya = solve_value_approx(s.at(Var::beta));
    CHECK(std::abs(xa * xa - 2.0) < 1e-9);
    CHECK(std::abs(ya * ya - 3.0) < 1e-9);
    (void)rational_count;
  }
}

TEST_CASE("coupled system with a shared extension") {
  // x^2 - 2 = 0, y - x - 1 = 0, z - x*y = 0 (z below y below x in rank).
  MultiPoly x = V(Var::alpha), y = V(Var::beta), z = V(Var::gamma);
  auto gb = buchberger({x * x - C(2), y - x - C(1), z - x * y});
  auto sols = solve_zero_dim(gb, vars_of(gb), 2);
  REQUIRE(sols.size() == 2);
  Scalar r2 = Scalar::sqrt_of(2);
  for (const auto& s : sols) {
    REQUIRE(s.all_scalar());
    Scalar xv = sc(s, Var::alpha);
    CHECK(xv * xv == Scalar(2));
    CHECK(sc(s, Var::beta) == xv + Scalar(1));
    CHECK(sc(s, Var::gamma) == xv * (xv + Scalar(1)));
  }
  (void)r2;
}

TEST_CASE("solutions substituted into every generator vanish") {
  MultiPoly x = V(Var::alpha), y = V(Var::beta);
  std::vector<MultiPoly> gens = {x * x + y * y - C(4), x - y * y};
  auto gb = buchberger(gens);
  auto sols = solve_zero_dim(gb);
  // y^4 + y^2 - 4 = 0 has two real roots (y = +-sqrt((sqrt17-1)/2)), x = y^2.
  REQUIRE(sols.size() == 2);
  for (const auto& s : sols) {
    double xa = solve_value_approx(s.at(Var::alpha));
    double ya = solve_value_approx(s.at(Var::beta));
    CHECK(std::abs(xa * xa + ya * ya - 4.0) < 1e-8);
    CHECK(std::abs(xa - ya * ya) < 1e-8);
  }
}
