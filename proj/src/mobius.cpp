#include "ruled/mobius.hpp"

#include <algorithm>
#include <stdexcept>

namespace ruled {

bool MobiusMap::is_identity() const {
  return beta.is_zero() && gamma.is_zero() && alpha == delta && !alpha.is_zero();
}

Scalar MobiusMap::eval(const Scalar& t) const {
  Scalar den = gamma * t + delta;
  if (den.is_zero()) throw std::domain_error("Mobius map pole");
  return (alpha * t + beta) / den;
}

RatFunc MobiusMap::as_ratfunc() const {
  return RatFunc(UniPoly(std::vector<Scalar>{beta, alpha}),
                 UniPoly(std::vector<Scalar>{delta, gamma}));
}

MobiusMap MobiusMap::after(const MobiusMap& o) const {
  MobiusMap r;
  r.alpha = alpha * o.alpha + beta * o.gamma;
  r.beta = alpha * o.beta + beta * o.delta;
  r.gamma = gamma * o.alpha + delta * o.gamma;
  r.delta = gamma * o.beta + delta * o.delta;
  return r;
}

MobiusMap MobiusMap::inverse() const {
  if (det().is_zero()) throw std::invalid_argument("singular Mobius map");
  return MobiusMap{delta, -beta, -gamma, alpha};
}

std::string MobiusMap::str() const { return as_ratfunc().str(); }

Reparam Reparam::normalized() const {
  Scalar s(0);
  for (const Scalar* c : {&psi.alpha, &psi.beta, &psi.gamma, &psi.delta}) {
    if (!c->is_zero()) {
      s = *c;
      break;
    }
  }
  if (s.is_zero()) throw std::invalid_argument("degenerate Mobius map");
  Reparam out = *this;
  Scalar inv = s.inv();
  out.psi.alpha = psi.alpha * inv;
  out.psi.beta = psi.beta * inv;
  out.psi.gamma = psi.gamma * inv;
  out.psi.delta = psi.delta * inv;
  Scalar sn(1);
  for (int i = 0; i < n; ++i) sn = sn * s;
  out.k = k * sn;
  return out;
}

std::pair<Scalar, Scalar> Reparam::eval(const Scalar& t, const Scalar& s) const {
  Scalar den = psi.gamma * t + psi.delta;
  Scalar denn(1);
  for (int i = 0; i < n; ++i) denn = denn * den;
  return {psi.eval(t), k * denn * s + c.eval(t)};
}

std::string Reparam::str() const {
  return "(t,s) -> (" + psi.str() + ", " + k.str() + "*(" +
         poly_str(UniPoly(std::vector<Scalar>{psi.delta, psi.gamma})) + ")^" +
         std::to_string(n) + "*s + " + c.str() + ")";
}

bool same_reparam(const Reparam& a, const Reparam& b) {
  if (a.n != b.n) return false;
  Reparam x = a.normalized(), y = b.normalized();
  return x.psi.alpha == y.psi.alpha && x.psi.beta == y.psi.beta &&
         x.psi.gamma == y.psi.gamma && x.psi.delta == y.psi.delta &&
         x.k == y.k && x.c == y.c;
}

Reparam reparam_after(const Reparam& r1, const Reparam& r0) {
  if (r1.n != r0.n)
    throw std::invalid_argument("reparametrization degree mismatch");
  Reparam out;
  out.n = r0.n;
  out.psi = r1.psi.after(r0.psi);
  out.k = r1.k * r0.k;
  // The s-coefficients contract through (g1 psi0 + d1) = (g' t + d')/(g0 t + d0),
  // so the composed c is k1 (g1 psi0 + d1)^n c0 + c1(psi0).
  RatFunc inner(UniPoly(std::vector<Scalar>{r1.psi.delta, r1.psi.gamma})
                    .eval(r0.psi.as_ratfunc()));
  RatFunc factor(Scalar(1));
  for (int i = 0; i < r0.n; ++i) factor = factor * inner;
  out.c = RatFunc(r1.k) * factor * r0.c + compose_mobius(r1.c, r0.psi);
  return out;
}

UniPoly mobius_numerator(const UniPoly& q, const MobiusMap& psi, int n) {
  if (q.deg() > n)
    throw std::invalid_argument("polynomial degree exceeds homogenization order");
  if (psi.det().is_zero()) throw std::invalid_argument("singular Mobius map");
  UniPoly at_b(std::vector<Scalar>{psi.beta, psi.alpha});
  UniPoly gt_d(std::vector<Scalar>{psi.delta, psi.gamma});
  std::vector<UniPoly> pab(n + 1), pgd(n + 1);
  pab[0] = UniPoly(Scalar(1));
  pgd[0] = UniPoly(Scalar(1));
  for (int i = 1; i <= n; ++i) {
    pab[i] = pab[i - 1] * at_b;
    pgd[i] = pgd[i - 1] * gt_d;
  }
  UniPoly acc;
  for (int j = 0; j <= q.deg(); ++j) {
    Scalar cj = q.coeff(j);
    if (cj.is_zero()) continue;
    acc += pab[j] * pgd[n - j] * cj;
  }
  return acc;
}

std::vector<MultiPoly> mobius_numerator_sym(const UniPoly& q, int n) {
  if (q.deg() > n)
    throw std::invalid_argument("polynomial degree exceeds homogenization order");
  using MP = Poly<MultiPoly>;
  MP at_b(std::vector<MultiPoly>{MultiPoly::variable(Var::beta),
                                 MultiPoly::variable(Var::alpha)});
  MP gt_d(std::vector<MultiPoly>{MultiPoly::variable(Var::delta),
                                 MultiPoly::variable(Var::gamma)});
  std::vector<MP> pab(n + 1), pgd(n + 1);
  pab[0] = MP(MultiPoly(1));
  pgd[0] = MP(MultiPoly(1));
  for (int i = 1; i <= n; ++i) {
    pab[i] = pab[i - 1] * at_b;
    pgd[i] = pgd[i - 1] * gt_d;
  }
  MP acc;
  for (int j = 0; j <= q.deg(); ++j) {
    Scalar cj = q.coeff(j);
    if (cj.is_zero()) continue;
    acc += pab[j] * pgd[n - j] * MultiPoly(cj);
  }
  std::vector<MultiPoly> out(n + 1);
  for (int l = 0; l <= n; ++l) out[l] = acc.coeff(l);
  return out;
}

RatFunc compose_mobius(const RatFunc& c, const MobiusMap& psi) {
  if (c.is_zero()) return RatFunc();
  int m = std::max(c.num().deg(), c.den().deg());
  UniPoly num = mobius_numerator(c.num(), psi, m);
  UniPoly den = mobius_numerator(c.den(), psi, m);
  if (den.is_zero())
    throw std::domain_error("composition collapses the denominator");
  return RatFunc(num, den);
}

}  // namespace ruled
