#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "ruled/equiv.hpp"

using namespace ruled;

namespace {

UniPoly up(std::initializer_list<int> cs) {
  std::vector<Scalar> v;
  for (int c : cs) v.emplace_back(c);
  return UniPoly(v);
}

RatFunc pf(std::initializer_list<int> cs) {
  return RatFunc(up(cs), UniPoly(Scalar(1)));
}

// Quintic-ruling pair related by exactly two affine maps.
RuledSurface surf1() {
  RuledSurface s;
  s.p = {pf({0, 1, 1, 0, 1}),            // t^4 + t^2 + t
         pf({0, 0, 0, 1, 0, 0, 1}),      // t^6 + t^3
         pf({0, 3, 1, 1, 0, 1})};        // t^5 + t^3 + t^2 + 3t
  s.q = {up({0, 1, 0, 1}),               // t^3 + t
         up({0, 0, 0, 0, 0, 1}),         // t^5
         up({3, 0, 1, 0, 1})};           // t^4 + t^2 + 3
  s.name = "S1";
  return normalize(s);
}

RuledSurface surf2() {
  RuledSurface s;
  s.p = {pf({-1, 5, 5, 0, 5}),           // 5t^4 + 5t^2 + 5t - 1
         pf({5, 9, 3, 3, 0, 3}),         // 3t^5 + 3t^3 + 3t^2 + 9t + 5
         pf({0, 1, 1, -1, 1, 0, -1})};   // -t^6 + t^4 - t^3 + t^2 + t
  s.q = {up({0, 5, 0, 5}),               // 5t^3 + 5t
         up({9, 0, 3, 0, 3}),            // 3t^4 + 3t^2 + 9
         up({0, 1, 0, 1, 0, -1})};       // -t^5 + t^3 + t
  s.name = "S2";
  return normalize(s);
}

MultiPoly hterm(long c, int a, int b, int g, int d) {
  MultiPoly m(c);
  if (a) m *= MultiPoly::variable(Var::alpha, a);
  if (b) m *= MultiPoly::variable(Var::beta, b);
  if (g) m *= MultiPoly::variable(Var::gamma, g);
  if (d) m *= MultiPoly::variable(Var::delta, d);
  return m;
}

std::set<std::string> distinct_conditions(const ReducedL& red) {
  std::set<std::string> out;
  for (const auto& c : red.conditions)
    if (!c.is_zero()) out.insert(c.primitive_scaled().str());
  return out;
}

std::array<Scalar, kNumVars> point(const Scalar& a, const Scalar& b,
                                   const Scalar& g, const Scalar& d,
                                   const Scalar& k) {
  std::array<Scalar, kNumVars> v;
  v.fill(Scalar(0));
  v[static_cast<int>(Var::alpha)] = a;
  v[static_cast<int>(Var::beta)] = b;
  v[static_cast<int>(Var::gamma)] = g;
  v[static_cast<int>(Var::delta)] = d;
  v[static_cast<int>(Var::k)] = k;
  return v;
}

UniPoly eval_ppoly(const PPoly& p, const std::array<Scalar, kNumVars>& vals) {
  std::vector<Scalar> c;
  for (const auto& m : p.coeffs()) c.push_back(m.eval(vals));
  return UniPoly(c);
}

const Mat3 kA1 = {vec3(Scalar(5), Scalar(0), Scalar(0)),
                  vec3(Scalar(0), Scalar(0), Scalar(3)),
                  vec3(Scalar(1), Scalar(-1), Scalar(0))};
const Mat3 kA2 = {vec3(Scalar(-5), Scalar(0), Scalar(0)),
                  vec3(Scalar(0), Scalar(0), Scalar(3)),
                  vec3(Scalar(-1), Scalar(1), Scalar(0))};
const Mat3 kA0 = {vec3(Scalar(-1), Scalar(0), Scalar(0)),
                  vec3(Scalar(0), Scalar(-1), Scalar(0)),
                  vec3(Scalar(0), Scalar(0), Scalar(1))};

}  // namespace

TEST_CASE("ruling system has block structure of full direction rank") {
  RuledSurface s1 = surf1(), s2 = surf2();
  LinearSystemL L = assemble_L(s1, s2);
  CHECK(L.n == 5);
  CHECK(L.A.size() == 18);
  CHECK(L.rhs.size() == 18);
  CHECK(rank_of(L.A) == 9);
  // block i only touches unknowns A_i1, A_i2, A_i3
  for (int i = 0; i < 3; ++i)
    for (int l = 0; l <= 5; ++l)
      for (int col = 0; col < 9; ++col)
        if (col / 3 != i) CHECK(L.A[i * 6 + l][col] == Scalar(0));
}

TEST_CASE("reduction expresses the matrix and yields the matching conditions") {
  RuledSurface s1 = surf1(), s2 = surf2();
  ReducedL red = reduce_L(assemble_L(s1, s2), 3);
  CHECK(red.r == 3);
  CHECK(red.free_entries.empty());
  CHECK(red.conditions.size() == 9);  // 3n - 6
  for (const auto& c : red.conditions) {
    if (c.is_zero()) continue;
    int deg = -1;
    CHECK(c.homogeneous_in({Var::alpha, Var::beta, Var::gamma, Var::delta},
                           &deg));
    CHECK(deg == 5);
    CHECK(c.degree_in(Var::k) == 0);
  }

  // with psi = id, k = 1 the matrix matching the rulings is unique
  auto vals = point(Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(1));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(red.A[i][j].eval(vals) == kA1[i][j]);

  // matrix entries are linear in the ruling scale k
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(red.A[i][j].degree_in(Var::k) <= 1);
}

TEST_CASE("matching conditions contain and imply the hand-computed set") {
  RuledSurface s1 = surf1(), s2 = surf2();
  ReducedL red = reduce_L(assemble_L(s1, s2), 3);
  std::set<std::string> got = distinct_conditions(red);
  CHECK(got.size() == 9);

  MultiPoly c1 = hterm(10, 3, 0, 1, 1) + hterm(-15, 2, 1, 0, 2) +
                 hterm(15, 2, 1, 2, 0) + hterm(-30, 1, 2, 1, 1) +
                 hterm(-20, 1, 0, 1, 3) + hterm(20, 1, 0, 3, 1) +
                 hterm(-5, 0, 3, 2, 0) + hterm(-30, 0, 1, 2, 2) +
                 hterm(5, 0, 1, 4, 0);
  MultiPoly c2 = hterm(3, 4, 0, 0, 1) + hterm(12, 3, 1, 1, 0) +
                 hterm(-18, 2, 2, 0, 1) + hterm(-3, 2, 0, 0, 3) +
                 hterm(9, 2, 0, 2, 1) + hterm(-12, 1, 3, 1, 0) +
                 hterm(-18, 1, 1, 1, 2) + hterm(6, 1, 1, 3, 0) +
                 hterm(-9, 0, 2, 2, 1) + hterm(-90, 0, 0, 2, 3) +
                 hterm(45, 0, 0, 4, 1);
  MultiPoly c3 = hterm(-5, 4, 1, 0, 0) + hterm(2, 3, 0, 1, 1) +
                 hterm(10, 2, 3, 0, 0) + hterm(-3, 2, 1, 0, 2) +
                 hterm(3, 2, 1, 2, 0) + hterm(-6, 1, 2, 1, 1) +
                 hterm(-4, 1, 0, 1, 3) + hterm(4, 1, 0, 3, 1) +
                 hterm(-1, 0, 3, 2, 0) + hterm(-6, 0, 1, 2, 2) +
                 hterm(1, 0, 1, 4, 0);
  // the three published consequences lie in the ideal of the full set
  std::vector<MultiPoly> mine;
  for (const auto& c : red.conditions)
    if (!c.is_zero()) mine.push_back(c);
  BudgetCounter bud(default_budget());
  auto gb = buchberger(mine, bud);
  for (const auto& f : {c1, c2, c3})
    CHECK(normal_form(f, gb, bud).is_zero());
}

TEST_CASE("self-matching conditions contain the hand-computed set verbatim") {
  RuledSurface s1 = surf1();
  ReducedL red = reduce_L(assemble_L(s1, s1), 3);
  std::set<std::string> got = distinct_conditions(red);
  CHECK(got.size() == 9);

  MultiPoly a = hterm(2, 3, 0, 1, 1) + hterm(-3, 2, 1, 0, 2) +
                hterm(3, 2, 1, 2, 0) + hterm(-6, 1, 2, 1, 1) +
                hterm(-4, 1, 0, 1, 3) + hterm(4, 1, 0, 3, 1) +
                hterm(-1, 0, 3, 2, 0) + hterm(-6, 0, 1, 2, 2) +
                hterm(1, 0, 1, 4, 0);
  MultiPoly b = hterm(5, 4, 1, 0, 0) + hterm(-10, 2, 3, 0, 0);
  MultiPoly c = hterm(1, 4, 0, 0, 1) + hterm(4, 3, 1, 1, 0) +
                hterm(-6, 2, 2, 0, 1) + hterm(-1, 2, 0, 0, 3) +
                hterm(3, 2, 0, 2, 1) + hterm(-4, 1, 3, 1, 0) +
                hterm(-6, 1, 1, 1, 2) + hterm(2, 1, 1, 3, 0) +
                hterm(-3, 0, 2, 2, 1) + hterm(-30, 0, 0, 2, 3) +
                hterm(15, 0, 0, 4, 1);
  for (const auto& f : {a, b, c})
    CHECK(got.count(f.primitive_scaled().str()) == 1);
}

TEST_CASE("symbolic translation specializes to the two known maps") {
  RuledSurface s1 = surf1(), s2 = surf2();
  ReducedL red = reduce_L(assemble_L(s1, s2), 3);
  TranslationExpr tr = recover_translation(s1, s2, red);

  // psi = t, k = 1:   b = (-1, 5, 0), c = 0
  auto v1 = point(Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(1));
  Scalar den = tr.b_den.eval(v1);
  REQUIRE(!den.is_zero());
  CHECK(tr.b_num[0].eval(v1) == Scalar(-1) * den);
  CHECK(tr.b_num[1].eval(v1) == Scalar(5) * den);
  CHECK(tr.b_num[2].eval(v1) == Scalar(0));
  CHECK(eval_ppoly(tr.c_num, v1).is_zero());
  CHECK(!eval_ppoly(tr.c_den, v1).is_zero());

  // psi = -t, k = 1:  b = (-1, 5, 0), c = 2t
  auto v2 = point(Scalar(-1), Scalar(0), Scalar(0), Scalar(1), Scalar(1));
  Scalar den2 = tr.b_den.eval(v2);
  REQUIRE(!den2.is_zero());
  CHECK(tr.b_num[0].eval(v2) == Scalar(-1) * den2);
  CHECK(tr.b_num[1].eval(v2) == Scalar(5) * den2);
  CHECK(tr.b_num[2].eval(v2) == Scalar(0));
  UniPoly cn = eval_ppoly(tr.c_num, v2), cd = eval_ppoly(tr.c_den, v2);
  REQUIRE(!cd.is_zero());
  CHECK(cn == cd * up({0, 2}));  // c = 2t
}

TEST_CASE("base-curve system vanishes exactly at the valid parameters") {
  RuledSurface s1 = surf1(), s2 = surf2();
  ReducedL red = reduce_L(assemble_L(s1, s2), 3);
  TranslationExpr tr = recover_translation(s1, s2, red);
  std::vector<MultiPoly> S = assemble_S(s1, s2, red, tr);
  CHECK(!S.empty());

  auto check_at = [&](Scalar a, Scalar b, Scalar g, Scalar d, Scalar k,
                      bool expect_zero) {
    auto v = point(a, b, g, d, k);
    Scalar det = a * d - b * g;
    v[static_cast<int>(Var::u)] = det.inv();
    v[static_cast<int>(Var::u2)] = k.inv();
    bool all = true;
    for (const auto& f : S)
      if (!f.eval(v).is_zero()) all = false;
    CHECK(all == expect_zero);
  };
  check_at(Scalar(1), Scalar(0), Scalar(0), Scalar(1), Scalar(1), true);
  check_at(Scalar(-1), Scalar(0), Scalar(0), Scalar(1), Scalar(1), true);
  check_at(Scalar(1), Scalar(1), Scalar(0), Scalar(1), Scalar(1), false);
}

TEST_CASE("concrete translation recovery rejects a wrong matrix") {
  RuledSurface s1 = surf1(), s2 = surf2();
  MobiusMap id;
  auto good = recover_translation_concrete(s1, s2, kA1, id, Scalar(1));
  REQUIRE(good.has_value());
  CHECK(good->first == vec3(Scalar(-1), Scalar(5), Scalar(0)));
  CHECK(good->second.is_zero());

  Mat3 bad = kA1;
  bad[0][1] = Scalar(1);
  CHECK(!recover_translation_concrete(s1, s2, bad, id, Scalar(1)).has_value());
}

TEST_CASE("verify accepts the known maps and rejects perturbations") {
  RuledSurface s1 = surf1(), s2 = surf2();
  Reparam phi1{MobiusMap{}, Scalar(1), RatFunc(Scalar(0)), 5};
  AffineMap f1{kA1, vec3(Scalar(-1), Scalar(5), Scalar(0))};
  CHECK(verify(f1, phi1, s1, s2));

  Reparam phi2{MobiusMap{Scalar(-1), Scalar(0), Scalar(0), Scalar(1)},
               Scalar(1), RatFunc(up({0, 2}), up({1})), 5};
  AffineMap f2{kA2, vec3(Scalar(-1), Scalar(5), Scalar(0))};
  CHECK(verify(f2, phi2, s1, s2));

  AffineMap f1_bad = f1;
  f1_bad.b[2] = Scalar(1);
  CHECK(!verify(f1_bad, phi1, s1, s2));
  Reparam phi1_bad = phi1;
  phi1_bad.k = Scalar(2);
  CHECK(!verify(f1, phi1_bad, s1, s2));
}

TEST_CASE("the pair admits exactly two affine equivalences") {
  RuledSurface s1 = surf1(), s2 = surf2();
  EquivalenceSet es = affine_equivalences(s1, s2);
  REQUIRE(es.tag == EquivalenceSet::Tag::Finite);
  REQUIRE(es.members.size() == 2);
  CHECK(es.algebraic.empty());

  const ScalarEquiv* with_id = nullptr;
  const ScalarEquiv* with_neg = nullptr;
  for (const auto& m : es.members) {
    if (m.phi.psi.is_identity()) with_id = &m;
    else with_neg = &m;
  }
  REQUIRE(with_id != nullptr);
  REQUIRE(with_neg != nullptr);

  CHECK(with_id->f.A == kA1);
  CHECK(with_id->f.b == vec3(Scalar(-1), Scalar(5), Scalar(0)));
  CHECK(with_id->phi.k == Scalar(1));
  CHECK(with_id->phi.c.is_zero());

  CHECK(with_neg->f.A == kA2);
  CHECK(with_neg->f.b == vec3(Scalar(-1), Scalar(5), Scalar(0)));
  Reparam expected_phi{MobiusMap{Scalar(-1), Scalar(0), Scalar(0), Scalar(1)},
                       Scalar(1), RatFunc(up({0, 2}), up({1})), 5};
  CHECK(same_reparam(with_neg->phi, expected_phi));

  // the second map is the first composed with the nontrivial self-equivalence
  AffineMap f0{kA0, vec3(Scalar(0), Scalar(0), Scalar(0))};
  CHECK(compose(with_id->f, f0) == with_neg->f);
}

TEST_CASE("self-equivalences are the identity and one involution") {
  RuledSurface s1 = surf1();
  EquivalenceSet es = affine_equivalences(s1, s1);
  REQUIRE(es.tag == EquivalenceSet::Tag::Finite);
  REQUIRE(es.members.size() == 2);

  const ScalarEquiv* trivial = nullptr;
  const ScalarEquiv* invol = nullptr;
  for (const auto& m : es.members) {
    if (m.f.A == mat3_identity()) trivial = &m;
    else invol = &m;
  }
  REQUIRE(trivial != nullptr);
  REQUIRE(invol != nullptr);
  CHECK(trivial->f.b == vec3(Scalar(0), Scalar(0), Scalar(0)));
  CHECK(invol->f.A == kA0);
  CHECK(invol->f.b == vec3(Scalar(0), Scalar(0), Scalar(0)));
  CHECK(compose(invol->f, invol->f) == AffineMap{});
  Reparam expected{MobiusMap{Scalar(-1), Scalar(0), Scalar(0), Scalar(1)},
                   Scalar(1), RatFunc(up({0, 2}), up({1})), 5};
  CHECK(same_reparam(invol->phi, expected));
}

TEST_CASE("equivalences transport through a generic affine image") {
  RuledSurface s1 = surf1();
  AffineMap m;
  m.A = {vec3(Scalar(-1, 2), Scalar(-1), Scalar(0)),
         vec3(Scalar(0), Scalar(1), Scalar(1)),
         vec3(Scalar(0), Scalar(2), Scalar(3))};
  m.b = vec3(Scalar(1), Scalar(2), Scalar(3));
  RuledSurface s3 = apply_affine(s1, m);

  EquivalenceSet es = affine_equivalences(s1, s3);
  REQUIRE(es.tag == EquivalenceSet::Tag::Finite);
  REQUIRE(es.members.size() == 2);
  bool found = false;
  for (const auto& e : es.members)
    if (e.f == m) found = true;
  CHECK(found);
  for (const auto& e : es.members) CHECK(verify(e.f, e.phi, s1, s3));
}

TEST_CASE("degree and rank mismatches are rejected early") {
  RuledSurface s1 = surf1();
  RuledSurface plane;  // rank-2 quadric-like ruling
  plane.p = {pf({0}), pf({0}), pf({0, 0, 1})};
  plane.q = {up({1}), up({0, 1}), up({0})};
  plane = normalize(plane);
  CHECK(affine_equivalences(s1, plane).tag == EquivalenceSet::Tag::None);

  RuledSurface s5 = surf1();
  EquivalenceSet es = affine_equivalences(s5, plane);
  CHECK(es.members.empty());
}
