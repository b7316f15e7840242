#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ruled/scalar.hpp"

using namespace ruled;

TEST_CASE("rational construction and arithmetic") {
  Scalar a(3, 4);
  Scalar b(1, 2);
  CHECK(a.is_rational());
  CHECK((a + b) == Scalar(5, 4));
  CHECK((a - b) == Scalar(1, 4));
  CHECK((a * b) == Scalar(3, 8));
  CHECK((a / b) == Scalar(3, 2));
  CHECK(-a == Scalar(-3, 4));
  CHECK(a.str() == "3/4");
  CHECK(Scalar(7).str() == "7");
  CHECK(Scalar(-2, 6) == Scalar(-1, 3));
}

TEST_CASE("quadratic field arithmetic in Q(sqrt 3)") {
  Scalar r3 = Scalar::sqrt_of(3);
  CHECK(r3.field_d() == 3);
  CHECK((r3 * r3) == Scalar(3));
  Scalar x = Scalar(1, 2) + Scalar(3, 8) * r3;  // 1/2 + 3/8 sqrt3
  CHECK(x.str() == "1/2+3/8*sqrt(3)");
  Scalar y = x * x;  // 1/4 + 27/64 + 2*(1/2)*(3/8) sqrt3 = 43/64 + 3/8 sqrt3
  CHECK(y.rat_part() == mpq_class(43, 64));
  CHECK(y.quad_part() == mpq_class(3, 8));
  CHECK((x * x.conj()).is_rational());
  CHECK((x / x) == Scalar(1));
  CHECK(x.inv() * x == Scalar(1));
}

TEST_CASE("field mixing raises") {
  Scalar r2 = Scalar::sqrt_of(2);
  Scalar r3 = Scalar::sqrt_of(3);
  CHECK_THROWS_AS((void)(r2 + r3), field_mismatch);
  CHECK_THROWS_AS((void)(r2 * r3), field_mismatch);
  // Rational values mix with anything.
  CHECK((Scalar(2) + r3) == (r3 + Scalar(2)));
}

TEST_CASE("exact sign and comparison") {
  Scalar r3 = Scalar::sqrt_of(3);
  // 7/4 - sqrt(3) > 0 since 49/16 > 3; 12/7 - sqrt(3) < 0 since 144/49 < 3.
  CHECK((Scalar(7, 4) - r3).sign() == 1);
  CHECK((Scalar(12, 7) - r3).sign() == -1);
  CHECK(Scalar(0).sign() == 0);
  CHECK((r3 - r3).sign() == 0);
  CHECK(Scalar(12, 7) < r3);
  CHECK(r3 < Scalar(7, 4));
  Scalar neg = Scalar(1) - r3;
  CHECK(neg.sign() == -1);
  CHECK(neg.abs() == r3 - Scalar(1));
}

TEST_CASE("squarefree requirement for d") {
  CHECK_THROWS(Scalar::sqrt_of(4));
  CHECK_THROWS(Scalar::sqrt_of(12));
  CHECK_THROWS(Scalar::sqrt_of(1));
  CHECK_NOTHROW(Scalar::sqrt_of(2));
  CHECK_NOTHROW(Scalar::sqrt_of(15));
}

TEST_CASE("collapse to rational on zero quad part") {
  Scalar r3 = Scalar::sqrt_of(3);
  Scalar z = r3 - r3;
  CHECK(z.is_rational());
  CHECK(z.field_d() == 0);
  Scalar w = (Scalar(1) + r3) - r3;
  CHECK(w.is_rational());
  CHECK(w == Scalar(1));
}

TEST_CASE("square roots inside the field") {
  Scalar root;
  CHECK(Scalar(9, 4).sqrt_in_field(root));
  CHECK(root == Scalar(3, 2));
  CHECK_FALSE(Scalar(2).sqrt_in_field(root));
  // 3/4 = (sqrt3 / 2)^2 becomes available once the ambient field is Q(sqrt3).
  CHECK(Scalar(3, 4).sqrt_in_field(root, 3));
  CHECK(root == Scalar::sqrt_of(3) / Scalar(2));
  // (1 + sqrt3/2)^2 = 7/4 + sqrt3
  Scalar v = Scalar(7, 4) + Scalar::sqrt_of(3);
  CHECK(v.sqrt_in_field(root));
  CHECK(root * root == v);
  CHECK(root.sign() == 1);
  Scalar nonsquare = Scalar(1) + Scalar::sqrt_of(3);
  CHECK_FALSE(nonsquare.sqrt_in_field(root));
  CHECK_FALSE(Scalar(-1).sqrt_in_field(root));
}

TEST_CASE("decimal literals resolve exactly") {
  CHECK(Scalar::from_decimal("0.5") == Scalar(1, 2));
  CHECK(Scalar::from_decimal("-1.25") == Scalar(-5, 4));
  CHECK(Scalar::from_decimal("3") == Scalar(3));
}

TEST_CASE("approximation is close") {
  Scalar x = Scalar(1, 2) + Scalar(3, 8) * Scalar::sqrt_of(3);
  double expect = 0.5 + 0.375 * 1.7320508075688772;
  CHECK(std::abs(x.approx() - expect) < 1e-12);
}
