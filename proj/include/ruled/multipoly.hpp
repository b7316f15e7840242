#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ruled/poly.hpp"
#include "ruled/scalar.hpp"

namespace ruled {

// Fixed variable universe.  Declaration order is the lex ranking, highest
// first: u > u2 > A11..A33 > b1..b3 > lambda > k > alpha > beta > gamma > delta.
enum class Var : int {
  u = 0,
  u2,
  A11, A12, A13, A21, A22, A23, A31, A32, A33,
  b1, b2, b3,
  lam,
  k,
  alpha, beta, gamma, delta,
  COUNT
};

constexpr int kNumVars = static_cast<int>(Var::COUNT);

const char* var_name(Var v);

using Mono = std::array<uint16_t, kNumVars>;

inline Mono mono_one() { return Mono{}; }
int mono_total_deg(const Mono& m);
bool mono_divides(const Mono& a, const Mono& b);          // a | b
Mono mono_mul(const Mono& a, const Mono& b);
Mono mono_div(const Mono& a, const Mono& b);              // a / b, assumes divisible
Mono mono_lcm(const Mono& a, const Mono& b);
bool mono_coprime(const Mono& a, const Mono& b);

// true if a > b in lex order with the ranking above
bool mono_lex_greater(const Mono& a, const Mono& b);

struct Term {
  Mono m;
  Scalar c;
};

// Sparse multivariate polynomial; terms sorted in strictly decreasing lex
// order, coefficients nonzero.
class MultiPoly {
 public:
  MultiPoly() = default;
  MultiPoly(const Scalar& c);  // NOLINT: constant
  MultiPoly(long n) : MultiPoly(Scalar(n)) {}  // NOLINT
  static MultiPoly variable(Var v, int exp = 1);
  static MultiPoly from_terms(std::vector<Term> terms);  // normalizes

  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && mono_total_deg(t_[0].m) == 0); }
  const std::vector<Term>& terms() const { return t_; }
  size_t term_count() const { return t_.size(); }

  const Term& lt() const;        // leading term; throws on zero
  const Mono& lm() const { return lt().m; }
  const Scalar& lc() const { return lt().c; }

  int total_degree() const;
  int degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }
  std::vector<Var> variables() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly mul_term(const Term& t) const;
  MultiPoly mul_scalar(const Scalar& s) const;
  bool operator==(const MultiPoly& o) const;

  MultiPoly pow(int e) const;

  // Substitutions produce polynomials in the remaining variables.
  MultiPoly substitute(Var v, const Scalar& value) const;
  MultiPoly substitute(Var v, const MultiPoly& value) const;

  // Full point evaluation; vals indexed by Var.  Variables actually present
  // must have entries.
  Scalar eval(const std::array<Scalar, kNumVars>& vals) const;

  // View as univariate in v (which must be the only variable present).
  UniPoly as_univariate(Var v) const;
  // View as univariate in v with MultiPoly coefficients in the others.
  Poly<MultiPoly> collect(Var v) const;

  // Exact division by a single variable to the first power; throws if any
  // term lacks it.
  MultiPoly div_var(Var v) const;

  // True if every term has the same total degree in the given variables.
  bool homogeneous_in(const std::vector<Var>& vs, int* deg_out = nullptr) const;

  // Scale so coefficients are primitive integers, sign-normalized; no-op on 0.
  MultiPoly primitive_scaled() const;
  MultiPoly monic_scaled() const;  // divide by leading coefficient

  // Primitive form with quadratic-unit factors stripped. Repeated
  // leading-coefficient arithmetic over Q(sqrt(d)) accumulates powers of the
  // fundamental unit of Z[sqrt(d)]; they are invisible to rational content
  // but their components grow geometrically, so among u^m * f the
  // representative with the smallest coefficients is chosen.
  MultiPoly balanced_scaled() const;

  std::string str() const;

 private:
  std::vector<Term> t_;
};

MultiPoly operator*(const Scalar& s, const MultiPoly& p);

}  // namespace ruled
