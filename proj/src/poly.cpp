#include "ruled/poly.hpp"

#include <sstream>

namespace ruled {

void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rc(a.coeffs());
  int db = b.deg();
  Scalar lb_inv = b.lead().inv();
  std::vector<Scalar> qc;
  int da = a.deg();
  if (da >= db) qc.assign(da - db + 1, Scalar(0));
  for (int i = da; i >= db; --i) {
    if (rc[i].is_zero()) continue;
    Scalar f = rc[i] * lb_inv;
    qc[i - db] = f;
    for (int j = 0; j <= db; ++j) rc[i - db + j] -= f * b.coeff(j);
  }
  q = UniPoly(std::move(qc));
  r = UniPoly(std::move(rc));
}

UniPoly rem(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divrem(a, b, q, r);
  return r;
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  UniPoly q, r;
  divrem(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("exact_div: nonzero remainder");
  return q;
}

UniPoly monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  UniPoly r(a);
  r *= a.lead().inv();
  return r;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = rem(x, y);
    x = y;
    y = monic(r);  // keep coefficients small-ish
  }
  return monic(x);
}

UniPoly gcd_all(const std::vector<UniPoly>& v) {
  UniPoly g;
  for (const auto& p : v) g = gcd(g, p);
  return g;
}

UniPoly poly_xgcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t) {
  UniPoly r0 = a, r1 = b;
  UniPoly s0(Scalar(1)), s1, t0, t1(Scalar(1));
  while (!r1.is_zero()) {
    UniPoly q, r;
    divrem(r0, r1, q, r);
    UniPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (r0.is_zero()) {
    s = UniPoly();
    t = UniPoly();
    return UniPoly();
  }
  Scalar inv_lead = Scalar(1) / r0.lead();
  s = s0 * inv_lead;
  t = t0 * inv_lead;
  return r0 * inv_lead;
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.deg() <= 0) return a;
  UniPoly g = gcd(a, a.derivative());
  if (g.deg() <= 0) return monic(a);
  return monic(exact_div(a, g));
}

UniPoly primitive_scaled(const UniPoly& a) {
  if (a.is_zero()) return a;
  // Collect all rational parts (a and b components) and scale by
  // den_lcm / num_gcd so every component becomes an integer, jointly primitive.
  mpz_class den_lcm(1), num_gcd(0);
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
  };
  for (const auto& c : a.coeffs()) {
    absorb(c.rat_part());
    absorb(c.quad_part());
  }
  if (num_gcd == 0) return a;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  UniPoly r(a);
  r *= Scalar(scale);
  // Normalize overall sign on the leading coefficient.
  if (r.lead().sign() < 0) r = -r;
  return r;
}

std::string poly_str(const UniPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.deg(); i >= 0; --i) {
    Scalar c = p.coeff(i);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (first) {
      if (neg) os << "-", cs = cs.substr(1);
    } else {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    bool composite = cs.find('+') != std::string::npos ||
                     cs.find('-', 1) != std::string::npos;
    if (i == 0) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

RatFunc::RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly(Scalar(1));
    return;
  }
  UniPoly g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  Scalar l = den_.lead().inv();
  num_ *= l;
  den_ *= l;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}
RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

Scalar RatFunc::eval(const Scalar& x) const {
  Scalar d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

std::string RatFunc::str(const std::string& var) const {
  if (is_polynomial()) return poly_str(num_, var);
  return "(" + poly_str(num_, var) + ")/(" + poly_str(den_, var) + ")";
}

}  // namespace ruled
