#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ruled/multipoly.hpp"
#include "ruled/poly.hpp"
#include "ruled/scalar.hpp"

namespace ruled {

// Fractional linear reparametrization t -> (alpha t + beta)/(gamma t + delta).
struct MobiusMap {
  Scalar alpha = Scalar(1);
  Scalar beta = Scalar(0);
  Scalar gamma = Scalar(0);
  Scalar delta = Scalar(1);

  Scalar det() const { return alpha * delta - beta * gamma; }
  bool is_identity() const;
  Scalar eval(const Scalar& t) const;  // throws std::domain_error at the pole
  RatFunc as_ratfunc() const;
  MobiusMap after(const MobiusMap& o) const;  // t -> this(o(t))
  MobiusMap inverse() const;
  std::string str() const;
};

// Parameter-plane map phi(t,s) = (psi(t), k (gamma t + delta)^n s + c(t))
// carrying one ruling onto another.
struct Reparam {
  MobiusMap psi;
  Scalar k = Scalar(1);
  RatFunc c;
  int n = 0;

  // Same map with psi rescaled so its first nonzero coefficient is 1
  // (k absorbs the n-th power of the scale).
  Reparam normalized() const;
  std::pair<Scalar, Scalar> eval(const Scalar& t, const Scalar& s) const;
  std::string str() const;
};

bool same_reparam(const Reparam& a, const Reparam& b);
Reparam reparam_after(const Reparam& r1, const Reparam& r0);  // r1 ∘ r0

// (gamma t + delta)^n q((alpha t + beta)/(gamma t + delta)) expanded as a
// polynomial: sum_j coeff_j(q) (alpha t + beta)^j (gamma t + delta)^(n-j).
// Requires deg q <= n and a nonsingular map.
UniPoly mobius_numerator(const UniPoly& q, const MobiusMap& psi, int n);

// Same expansion with alpha..delta symbolic; entry j is the coefficient of
// t^j as a polynomial in the four Mobius variables.
std::vector<MultiPoly> mobius_numerator_sym(const UniPoly& q, int n);

// c(psi(t)) as a rational function.
RatFunc compose_mobius(const RatFunc& c, const MobiusMap& psi);

}  // namespace ruled
