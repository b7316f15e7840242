#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ruled/groebner.hpp"

#include <cstdlib>

using namespace ruled;

static MultiPoly V(Var v) { return MultiPoly::variable(v); }
static MultiPoly C(int n) { return MultiPoly(Scalar(n)); }

TEST_CASE("already a basis") {
  // {x-1, y-2} with x=alpha, y=beta.
  std::vector<MultiPoly> gens = {V(Var::alpha) - C(1), V(Var::beta) - C(2)};
  auto gb = buchberger(gens);
  REQUIRE(gb.size() == 2);
  for (const auto& g : gens) {
    BudgetCounter b(default_budget());
    CHECK(is_ideal_member(g, gb, b));
  }
  std::vector<Var> vars = {Var::alpha, Var::beta};
  CHECK(ideal_dimension(gb, vars) == 0);
}

TEST_CASE("monomial ideal stays itself") {
  std::vector<MultiPoly> gens = {V(Var::alpha).pow(2), V(Var::alpha) * V(Var::beta)};
  auto gb = buchberger(gens);
  BudgetCounter b(default_budget());
  CHECK(is_ideal_member(V(Var::alpha).pow(2) * V(Var::beta), gb, b));
  for (const auto& g : gens) {
    BudgetCounter b2(default_budget());
    CHECK(is_ideal_member(g, gb, b2));
  }
}

TEST_CASE("textbook lex elimination") {
  // {x^2+y^2-1, x-y} -> triangular: contains a univariate in y.
  MultiPoly x = V(Var::alpha), y = V(Var::beta);
  auto gb = buchberger({x * x + y * y - C(1), x - y});
  REQUIRE(gb.size() == 2);
  // Lowest element depends only on beta: 2 beta^2 - 1 (monic: beta^2 - 1/2).
  const MultiPoly& low = gb.front();
  bool only_beta = true;
  for (const auto& t : low.terms())
    for (int v = 0; v < kNumVars; ++v)
      if (t.m[v] && v != static_cast<int>(Var::beta)) only_beta = false;
  CHECK(only_beta);
  MultiPoly expect = y * y - MultiPoly(Scalar(1, 2));
  CHECK(low == expect);
}

TEST_CASE("inconsistent system reduces to one") {
  auto gb = buchberger({V(Var::alpha), V(Var::alpha) - C(1)});
  REQUIRE(gb.size() == 1);
  CHECK(gb[0].is_constant());
  std::vector<Var> vars = {Var::alpha};
  CHECK(ideal_dimension(gb, vars) == -1);
}

TEST_CASE("reduced basis properties") {
  MultiPoly x = V(Var::alpha), y = V(Var::beta), z = V(Var::gamma);
  std::vector<MultiPoly> gens = {x + y + z - C(3), x * y + y * z + z * x - C(3),
                                 x * y * z - C(1)};
  auto gb = buchberger(gens);
  // Inputs are members.
  for (const auto& g : gens) {
    BudgetCounter b(default_budget());
    CHECK(is_ideal_member(g, gb, b));
  }
  // Every S-polynomial reduces to zero.
  for (size_t i = 0; i < gb.size(); ++i) {
    for (size_t j = i + 1; j < gb.size(); ++j) {
      Mono l = mono_lcm(gb[i].lm(), gb[j].lm());
      Term ti{mono_div(l, gb[i].lm()), Scalar(1) / gb[i].lc()};
      Term tj{mono_div(l, gb[j].lm()), Scalar(1) / gb[j].lc()};
      MultiPoly sp = gb[i].mul_term(ti) - gb[j].mul_term(tj);
      BudgetCounter b(default_budget());
      CHECK(normal_form(sp, gb, b).is_zero());
    }
  }
  // Reduced: no term of gb[i] divisible by lm(gb[j]), j != i; monic leads.
  for (size_t i = 0; i < gb.size(); ++i) {
    CHECK(gb[i].lc() == Scalar(1));
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : gb[i].terms()) CHECK_FALSE(mono_divides(gb[j].lm(), t.m));
    }
  }
  // (x-1)^... the point (1,1,1) is the real solution; x^3-3x^2+3x-1 member.
  MultiPoly probe = x.pow(3) - C(3) * x.pow(2) + C(3) * x - C(1);
  BudgetCounter b(default_budget());
  CHECK(is_ideal_member(probe, gb, b));
}

TEST_CASE("dimension on staircases") {
  std::vector<Var> vars = {Var::alpha, Var::beta};
  CHECK(ideal_dimension({V(Var::alpha), V(Var::beta)}, vars) == 0);
  CHECK(ideal_dimension({V(Var::alpha)}, vars) == 1);
  CHECK(ideal_dimension({C(1)}, vars) == -1);
  CHECK(ideal_dimension({}, vars) == 2);
  std::vector<Var> vars3 = {Var::alpha, Var::beta, Var::gamma};
  CHECK(ideal_dimension({V(Var::alpha) * V(Var::beta)}, vars3) == 2);
  auto free_vars = independent_vars({V(Var::alpha)}, vars);
  REQUIRE(free_vars.size() == 1);
  CHECK(free_vars[0] == Var::beta);
}

TEST_CASE("budget exceeds throw mentions the knob") {
  MultiPoly x = V(Var::alpha), y = V(Var::beta), z = V(Var::gamma);
  std::vector<MultiPoly> gens = {x.pow(3) + y + z - C(3), x * y.pow(2) + y * z + C(2),
                                 x * y * z.pow(2) - C(7)};
  BudgetCounter tiny(3);
  try {
    buchberger(gens, tiny);
    FAIL("expected budget_exceeded");
  } catch (const budget_exceeded& e) {
    CHECK(std::string(e.what()).find("RULED_EQUIV_BUDGET") != std::string::npos);
  }
}

TEST_CASE("budget env override") {
  setenv("RULED_EQUIV_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  unsetenv("RULED_EQUIV_BUDGET");
  CHECK(default_budget() == 10000000);
}

TEST_CASE("saturation kills spurious branch") {
  // Ideal ((alpha*delta - beta*gamma) * alpha) with the invertibility witness
  // (alpha*delta - beta*gamma)*u - 1 forces alpha = 0.
  MultiPoly det = V(Var::alpha) * V(Var::delta) - V(Var::beta) * V(Var::gamma);
  auto gb = buchberger({det * V(Var::alpha), det * V(Var::u) - C(1)});
  BudgetCounter b(default_budget());
  CHECK(is_ideal_member(V(Var::alpha), gb, b));
}
