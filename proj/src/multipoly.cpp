#include "ruled/multipoly.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ruled {

const char* var_name(Var v) {
  static const char* names[kNumVars] = {
      "u",  "u2",  "A11", "A12", "A13", "A21", "A22", "A23", "A31", "A32",
      "A33", "b1", "b2",  "b3",  "lambda", "k", "alpha", "beta", "gamma", "delta"};
  return names[static_cast<int>(v)];
}

int mono_total_deg(const Mono& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) {
    unsigned s = static_cast<unsigned>(a[i]) + b[i];
    if (s > 0xffff) throw std::overflow_error("monomial exponent overflow");
    r[i] = static_cast<uint16_t>(s);
  }
  return r;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r[i] = static_cast<uint16_t>(a[i] - b[i]);
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kNumVars; ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool mono_coprime(const Mono& a, const Mono& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] && b[i]) return false;
  return true;
}

bool mono_lex_greater(const Mono& a, const Mono& b) {
  for (int i = 0; i < kNumVars; ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

namespace {
struct LexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return mono_lex_greater(a, b); }
};
}  // namespace

MultiPoly::MultiPoly(const Scalar& c) {
  if (!c.is_zero()) t_.push_back(Term{mono_one(), c});
}

MultiPoly MultiPoly::variable(Var v, int exp) {
  MultiPoly p;
  if (exp < 0) throw std::invalid_argument("negative exponent");
  Mono m = mono_one();
  m[static_cast<int>(v)] = static_cast<uint16_t>(exp);
  p.t_.push_back(Term{m, Scalar(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  std::map<Mono, Scalar, LexGreater> acc;
  for (auto& t : terms) {
    if (t.c.is_zero()) continue;
    auto [it, fresh] = acc.emplace(t.m, t.c);
    if (!fresh) it->second += t.c;
  }
  MultiPoly p;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) p.t_.push_back(Term{m, c});
  return p;
}

const Term& MultiPoly::lt() const {
  if (t_.empty()) throw std::domain_error("leading term of zero polynomial");
  return t_.front();
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, mono_total_deg(t.m));
  return d;
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  int i = static_cast<int>(v);
  for (const auto& t : t_) d = std::max(d, static_cast<int>(t.m[i]));
  return d;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<Var> out;
  for (int i = 0; i < kNumVars; ++i) {
    for (const auto& t : t_)
      if (t.m[i]) {
        out.push_back(static_cast<Var>(i));
        break;
      }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& t : r.t_) t.c = -t.c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    if (t_[i].m == o.t_[j].m) {
      Scalar c = t_[i].c + o.t_[j].c;
      if (!c.is_zero()) r.t_.push_back(Term{t_[i].m, std::move(c)});
      ++i, ++j;
    } else if (mono_lex_greater(t_[i].m, o.t_[j].m)) {
      r.t_.push_back(t_[i++]);
    } else {
      r.t_.push_back(o.t_[j++]);
    }
  }
  while (i < t_.size()) r.t_.push_back(t_[i++]);
  while (j < o.t_.size()) r.t_.push_back(o.t_[j++]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::mul_term(const Term& t) const {
  if (t.c.is_zero()) return MultiPoly();
  MultiPoly r;
  r.t_.reserve(t_.size());
  for (const auto& s : t_) r.t_.push_back(Term{mono_mul(s.m, t.m), s.c * t.c});
  return r;
}

MultiPoly MultiPoly::mul_scalar(const Scalar& s) const {
  if (s.is_zero()) return MultiPoly();
  MultiPoly r(*this);
  for (auto& t : r.t_) t.c *= s;
  return r;
}

MultiPoly operator*(const Scalar& s, const MultiPoly& p) { return p.mul_scalar(s); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return MultiPoly();
  std::map<Mono, Scalar, LexGreater> acc;
  for (const auto& a : t_)
    for (const auto& b : o.t_) {
      Mono m = mono_mul(a.m, b.m);
      auto [it, fresh] = acc.emplace(m, a.c * b.c);
      if (!fresh) it->second += a.c * b.c;
    }
  MultiPoly r;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.t_.push_back(Term{m, c});
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].m == o.t_[i].m) || !(t_[i].c == o.t_[i].c)) return false;
  return true;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative power");
  MultiPoly r(Scalar(1));
  MultiPoly base(*this);
  while (e) {
    if (e & 1) r = r * base;
    base = (e >>= 1) ? base * base : base;
  }
  return r;
}

MultiPoly MultiPoly::substitute(Var v, const Scalar& value) const {
  int vi = static_cast<int>(v);
  std::vector<Term> out;
  out.reserve(t_.size());
  for (const auto& t : t_) {
    Term nt = t;
    int e = nt.m[vi];
    if (e) {
      nt.m[vi] = 0;
      Scalar p(1);
      for (int i = 0; i < e; ++i) p *= value;
      nt.c *= p;
    }
    out.push_back(std::move(nt));
  }
  return from_terms(std::move(out));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  int vi = static_cast<int>(v);
  // Cache powers of the replacement.
  std::vector<MultiPoly> powers{MultiPoly(Scalar(1))};
  MultiPoly acc;
  for (const auto& t : t_) {
    int e = t.m[vi];
    while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
    Term stripped = t;
    stripped.m[vi] = 0;
    acc += powers[e].mul_term(stripped);
  }
  return acc;
}

Scalar MultiPoly::eval(const std::array<Scalar, kNumVars>& vals) const {
  Scalar acc(0);
  for (const auto& t : t_) {
    Scalar v = t.c;
    for (int i = 0; i < kNumVars; ++i)
      for (int e = 0; e < t.m[i]; ++e) v *= vals[i];
    acc += v;
  }
  return acc;
}

UniPoly MultiPoly::as_univariate(Var v) const {
  int vi = static_cast<int>(v);
  std::vector<Scalar> c(degree_in(v) + 1, Scalar(0));
  for (const auto& t : t_) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != vi && t.m[i])
        throw std::domain_error("as_univariate: polynomial involves other variables");
    c[t.m[vi]] += t.c;
  }
  return UniPoly(std::move(c));
}

Poly<MultiPoly> MultiPoly::collect(Var v) const {
  int vi = static_cast<int>(v);
  std::vector<MultiPoly> c(degree_in(v) + 1);
  for (const auto& t : t_) {
    Term stripped = t;
    int e = stripped.m[vi];
    stripped.m[vi] = 0;
    c[e] += MultiPoly::from_terms({stripped});
  }
  return Poly<MultiPoly>(std::move(c));
}

MultiPoly MultiPoly::div_var(Var v) const {
  int vi = static_cast<int>(v);
  MultiPoly r(*this);
  for (auto& t : r.t_) {
    if (t.m[vi] == 0) throw std::domain_error("div_var: term not divisible");
    t.m[vi] -= 1;
  }
  return r;
}

bool MultiPoly::homogeneous_in(const std::vector<Var>& vs, int* deg_out) const {
  if (t_.empty()) {
    if (deg_out) *deg_out = -1;
    return true;
  }
  int want = -1;
  for (const auto& t : t_) {
    int d = 0;
    for (Var v : vs) d += t.m[static_cast<int>(v)];
    if (want == -1)
      want = d;
    else if (d != want)
      return false;
  }
  if (deg_out) *deg_out = want;
  return true;
}

MultiPoly MultiPoly::primitive_scaled() const {
  if (is_zero()) return *this;
  mpz_class den_lcm(1), num_gcd(0);
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
  };
  for (const auto& t : t_) {
    absorb(t.c.rat_part());
    absorb(t.c.quad_part());
  }
  if (num_gcd == 0) return *this;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  MultiPoly r = mul_scalar(Scalar(scale));
  if (r.lc().sign() < 0) r = -r;
  return r;
}

MultiPoly MultiPoly::monic_scaled() const {
  if (is_zero()) return *this;
  return mul_scalar(lc().inv());
}

namespace {

size_t coeff_bits(const MultiPoly& p) {
  size_t mx = 0;
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    mx = std::max(mx, mpz_sizeinbase(q.get_num().get_mpz_t(), 2));
    mx = std::max(mx, mpz_sizeinbase(q.get_den().get_mpz_t(), 2));
  };
  for (const auto& t : p.terms()) {
    absorb(t.c.rat_part());
    absorb(t.c.quad_part());
  }
  return mx;
}

// log2 sizes of the two real embeddings a +- b*sqrt(d) of one coefficient
// with integer parts, exact up to a couple of bits: the larger embedding is
// about max(|a|, |b|sqrt(d)) and the product of both is |a^2 - d b^2|; the
// sign of a*b says which one dominates.
void embedding_logs(const mpq_class& a, const mpq_class& b, long d,
                    double& lp, double& lm) {
  auto zbits = [](const mpz_class& z) {
    return z == 0 ? 0.0
                  : static_cast<double>(mpz_sizeinbase(z.get_mpz_t(), 2));
  };
  if (b == 0) {
    lp = lm = zbits(a.get_num());
    return;
  }
  mpz_class an = a.get_num(), bn = b.get_num();
  mpz_class norm = an * an - d * bn * bn;
  double big = std::max(zbits(an), zbits(bn) + std::log2(static_cast<double>(d)) / 2);
  double total = zbits(norm);
  double small = total - big;
  if (sgn(an) * sgn(bn) >= 0) {
    lp = big;
    lm = small;
  } else {
    lp = small;
    lm = big;
  }
}

}  // namespace

MultiPoly MultiPoly::balanced_scaled() const {
  MultiPoly r = primitive_scaled();
  long d = 0;
  for (const auto& t : r.t_)
    if (t.c.field_d()) {
      d = t.c.field_d();
      break;
    }
  if (!d) return r;
  // After content stripping all coefficient parts are integers. Multiplying
  // by u^m shifts the embedding logs by +-m*L, so the minimizer of the larger
  // one is read off directly.
  double X = -1e300, Y = -1e300;
  for (const auto& t : r.t_) {
    double lp, lm;
    embedding_logs(t.c.rat_part(), t.c.quad_part(), d, lp, lm);
    X = std::max(X, lp);
    Y = std::max(Y, lm);
  }
  Scalar u = quadratic_unit(d);
  double lpu, lmu;
  embedding_logs(u.rat_part(), u.quad_part(), d, lpu, lmu);
  double L = std::max(lpu, 1.0);
  long m = std::lround((Y - X) / (2 * L));
  if (m == 0) return r;
  Scalar pw(1);
  Scalar base = m > 0 ? u : u.inv();
  for (long e = std::labs(m); e > 0; e >>= 1) {
    if (e & 1) pw = pw * base;
    if (e > 1) base = base * base;
  }
  MultiPoly cand = r.mul_scalar(pw).primitive_scaled();
  return coeff_bits(cand) < coeff_bits(r) ? cand : r;
}

std::string MultiPoly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    std::string cs = t.c.str();
    bool neg = cs[0] == '-';
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    } else if (neg) {
      os << "-";
      cs = cs.substr(1);
    }
    bool composite = cs.find('+') != std::string::npos || cs.find('-', 1) != std::string::npos;
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    if (mono.empty()) {
      os << (composite ? "(" + cs + ")" : cs);
    } else {
      if (cs != "1") os << (composite ? "(" + cs + ")" : cs) << "*";
      os << mono;
    }
    first = false;
  }
  return os.str();
}

}  // namespace ruled
