#include "ruled/algnum.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace ruled {

namespace {

bool all_rational(const UniPoly& p) {
  for (const auto& c : p.coeffs())
    if (!c.is_rational()) return false;
  return true;
}

}  // namespace

AlgNum::AlgNum(UniPoly minpoly_candidate, QIv isolating)
    : mp_(primitive_scaled(squarefree_part(minpoly_candidate))), iv_(std::move(isolating)) {
  if (mp_.deg() < 1) throw std::invalid_argument("algebraic number needs a nonconstant polynomial");
  if (!all_rational(mp_))
    throw std::invalid_argument("algebraic number polynomial must have rational coefficients");
  if (iv_.is_point()) {
    if (!(mp_.eval(Scalar(iv_.lo)) == Scalar(0)))
      throw std::invalid_argument("point interval is not a root");
    return;
  }
  if (mp_.eval(Scalar(iv_.lo)).is_zero() || mp_.eval(Scalar(iv_.hi)).is_zero())
    throw std::invalid_argument("isolating interval endpoints must not be roots");
  if (chain().count(iv_.lo, iv_.hi) != 1)
    throw std::invalid_argument("interval does not isolate exactly one root");
}

const SturmChain& AlgNum::chain() const {
  if (!chain_) chain_ = std::make_shared<SturmChain>(mp_);
  return *chain_;
}

void AlgNum::refine(int steps) const {
  if (iv_.is_point()) return;
  refine_root(chain(), iv_, steps);
}

int AlgNum::sign() const {
  if (equals_scalar(Scalar(0))) return 0;
  while (iv_.contains_zero() && !iv_.is_point()) refine(8);
  if (iv_.is_point()) return sgn(iv_.lo);
  return iv_.lo > 0 ? 1 : -1;
}

bool AlgNum::equals(const AlgNum& o) const {
  UniPoly g = gcd(mp_, o.mp_);
  if (g.deg() < 1) return false;  // minimal polynomials share no root
  // Equal iff some root of g lies inside both isolating intervals: g divides
  // each candidate polynomial, so a g-root contained in the interval is the
  // isolated root itself.  Closed containment suffices; refine to decide.
  RootIsolation common = sturm_isolate(g);
  SturmChain gc(g);
  // 1: the g-root in J is the value isolated by iv; -1: it is not; 0: unknown.
  auto status = [&](const QIv& J, const QIv& iv) -> int {
    if (iv.is_point()) {
      if (!g.eval(Scalar(mpq_class(iv.lo))).is_zero()) return -1;
      return J.contains(iv.lo) ? 1 : -1;
    }
    if (!J.intersects(iv)) return -1;
    if (J.lo >= iv.lo && J.hi <= iv.hi) return 1;
    return 0;
  };
  // Refine J alone: it shrinks to the g-root, which is interior to any fixed
  // isolating interval it belongs to, so the loop always resolves.
  for (auto& J : common.intervals) {
    for (int round = 0; round < 4096; ++round) {
      int s1 = status(J, iv_), s2 = status(J, o.iv_);
      if (s1 == 1 && s2 == 1) return true;
      if (s1 == -1 || s2 == -1) break;
      refine_root(gc, J, 8);
    }
  }
  return false;
}

int AlgNum::compare(const AlgNum& o) const {
  if (equals(o)) return 0;
  while (iv_.intersects(o.iv_)) {
    refine(8);
    o.refine(8);
  }
  return iv_.hi < o.iv_.lo ? -1 : 1;
}

bool AlgNum::equals_scalar(const Scalar& s) const {
  if (!mp_.eval(s).is_zero()) return false;
  // s is a root of mp; it is the isolated root iff it lies in the interval.
  Scalar lo{mpq_class(iv_.lo)}, hi{mpq_class(iv_.hi)};
  return s >= lo && s <= hi;
}

namespace {

// Writes q = e^2 * f with f a positive squarefree integer.  Returns false if
// the trial division bound was not enough to certify f squarefree.
bool squarefree_kernel(const mpq_class& q, long& f_out) {
  if (q <= 0) return false;
  mpz_class n = q.get_num() * q.get_den();
  mpz_class f = 1;
  const mpz_class bound = 1000000;
  mpz_class p = 2;
  for (; p < bound && p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) f *= p;
  }
  if (n > 1) {
    if (p * p > n) {
      f *= n;  // remainder is prime
    } else if (mpz_perfect_square_p(n.get_mpz_t())) {
      // square of a prime above the bound: contributes nothing
    } else if (n < bound * bound * bound) {
      f *= n;  // at most two distinct primes above the bound
    } else {
      return false;  // could hide a square factor
    }
  }
  if (!f.fits_slong_p()) return false;
  f_out = f.get_si();
  return true;
}

}  // namespace

bool AlgNum::to_scalar(Scalar& out, long ambient_d) const {
  // Degenerate point interval.
  if (iv_.is_point()) {
    out = Scalar(iv_.lo);
    return true;
  }
  // Rational root: denominators divide the (integer) leading coefficient.
  mpz_class lead = mp_.lead().rat_part().get_num();
  mpq_class gap = mpq_class(1) / (mpq_class(lead * lead) + 1);
  while (iv_.width() >= gap) refine(8);
  mpq_class cand = simplest_in(iv_.lo, iv_.hi);
  if (mp_.eval(Scalar(cand)).is_zero()) {
    out = Scalar(cand);
    return true;
  }
  // Exact quadratic solve when the candidate polynomial is itself quadratic.
  if (mp_.deg() == 2) {
    Scalar A = mp_.coeff(2), B = mp_.coeff(1), C = mp_.coeff(0);
    Scalar disc = B * B - Scalar(4) * A * C;
    Scalar sq;
    bool have = disc.sqrt_in_field(sq, ambient_d);
    if (!have && ambient_d == 0 && disc.is_rational() && disc.sign() > 0) {
      // No field was imposed: read the right one off the discriminant.
      long f = 0;
      if (squarefree_kernel(disc.rat_part(), f) && f >= 2)
        have = disc.sqrt_in_field(sq, f);
    }
    if (!have) return false;
    for (int pick = 0; pick < 2; ++pick) {
      Scalar root = (pick ? (-B - sq) : (-B + sq)) / (Scalar(2) * A);
      if (equals_scalar(root)) {
        out = root;
        return true;
      }
    }
    return false;
  }
  if (ambient_d < 2) return false;
  // Reducible candidate of higher degree: pair with another real root to
  // reconstruct a + b*sqrt(d) (whose conjugate is also a root of mp).
  RootIsolation iso = sturm_isolate(mp_);
  SturmChain ch(mp_);
  QIv sd = sqrt_enclosure(ambient_d, 128);
  for (int round = 0; round < 6; ++round) {
    for (auto& other : iso.intervals) {
      QIv a_iv = qiv_mul(qiv_add(iv_, other), QIv::point(mpq_class(1, 2)));
      QIv diff = qiv_mul(qiv_sub(iv_, other), QIv::point(mpq_class(1, 2)));
      QIv inv_sd(mpq_class(1) / sd.hi, mpq_class(1) / sd.lo);
      QIv b_iv = qiv_mul(diff, inv_sd);
      mpq_class a = simplest_in(a_iv.lo, a_iv.hi);
      mpq_class b = simplest_in(b_iv.lo, b_iv.hi);
      if (b == 0) continue;
      Scalar candq(a, b, ambient_d);
      if (mp_.eval(candq).is_zero() && equals_scalar(candq)) {
        out = candq;
        return true;
      }
    }
    refine(64);
    for (auto& other : iso.intervals) refine_root(ch, other, 64);
  }
  return false;
}

double AlgNum::approx() const {
  refine(40);
  return (iv_.mid()).get_d();
}

std::string AlgNum::str() const {
  std::ostringstream os;
  os << "algnum(" << poly_str(mp_) << ", " << iv_.str() << ", ~" << approx() << ")";
  return os.str();
}

// ---- minimal polynomial of h(theta) ----

namespace {

// Dense exact rational matrix.
using QMat = std::vector<std::vector<mpq_class>>;

QMat qmat_mul(const QMat& a, const QMat& b) {
  size_t n = a.size();
  QMat r(n, std::vector<mpq_class>(n, mpq_class(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

mpq_class qmat_trace(const QMat& a) {
  mpq_class t(0);
  for (size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace

UniPoly minpoly_candidate_of_value(const UniPoly& h, const UniPoly& g) {
  if (g.deg() < 1) throw std::invalid_argument("extension polynomial must be nonconstant");
  long d = 0;
  for (const auto& c : g.coeffs())
    if (!c.is_rational()) d = c.field_d();
  for (const auto& c : h.coeffs())
    if (!c.is_rational()) {
      if (d != 0 && c.field_d() != d) throw field_mismatch(d, c.field_d());
      d = c.field_d();
    }
  int n = g.deg();
  int m = d ? 2 * n : n;  // Q-dimension of the quotient ring

  // Images of basis elements under multiplication by h, reduced mod g.
  // Basis: theta^i (i < n), then sqrt(d)*theta^i when d != 0.
  UniPoly hr = rem(h, g);
  std::vector<UniPoly> img(n);
  UniPoly cur = hr;
  for (int i = 0; i < n; ++i) {
    img[i] = cur;
    cur = rem(cur.shifted(1), g);
  }
  QMat M(m, std::vector<mpq_class>(m, mpq_class(0)));
  for (int i = 0; i < n; ++i) {
    for (int t = 0; t <= img[i].deg(); ++t) {
      Scalar c = img[i].coeff(t);
      M[t][i] = c.rat_part();
      if (d) M[n + t][i] = c.quad_part();
    }
    if (d) {
      // Column for sqrt(d)*theta^i: h*sqrt(d)*theta^i = sqrt(d)*(h theta^i).
      for (int t = 0; t <= img[i].deg(); ++t) {
        Scalar c = img[i].coeff(t);
        M[t][n + i] = c.quad_part() * d;  // (a+b sqrt d) sqrt d = bd + a sqrt d
        M[n + t][n + i] = c.rat_part();
      }
    }
  }

  // Characteristic polynomial by Newton's identities on power-sum traces.
  std::vector<mpq_class> tr(m + 1, mpq_class(0));
  QMat P = M;
  for (int k = 1; k <= m; ++k) {
    tr[k] = qmat_trace(P);
    if (k < m) P = qmat_mul(P, M);
  }
  std::vector<mpq_class> e(m + 1, mpq_class(0));
  e[0] = 1;
  for (int k = 1; k <= m; ++k) {
    mpq_class s(0);
    for (int i = 1; i <= k; ++i) {
      mpq_class term = e[k - i] * tr[i];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    e[k] = s / k;
  }
  std::vector<Scalar> coeffs(m + 1);
  for (int k = 0; k <= m; ++k) {
    mpq_class c = e[m - k];
    if ((m - k) % 2 == 1) c = -c;
    coeffs[k] = Scalar(c);
  }
  UniPoly charpoly{std::move(coeffs)};
  return primitive_scaled(squarefree_part(charpoly));
}

QIv value_enclosure(const UniPoly& h, const QIv& theta_iv, int prec_bits) {
  QIv acc = QIv::point(mpq_class(0));
  for (int i = h.deg(); i >= 0; --i) {
    acc = qiv_add(qiv_mul(acc, theta_iv), scalar_enclosure(h.coeff(i), prec_bits));
  }
  return acc;
}

AlgNum algnum_of_value(const UniPoly& h, const UniPoly& g, const SturmChain& theta_chain,
                       QIv& theta_iv) {
  UniPoly mp = minpoly_candidate_of_value(h, g);
  if (mp.deg() == 1) {
    mpq_class root = (-mp.coeff(0) / mp.coeff(1)).rat_part();
    return AlgNum(mp, QIv::point(root));
  }
  RootIsolation iso = sturm_isolate(mp);
  SturmChain mpc(mp);
  int prec = 64;
  for (int round = 0; round < 4096; ++round) {
    QIv enc = value_enclosure(h, theta_iv, prec);
    std::vector<size_t> hits;
    for (size_t i = 0; i < iso.intervals.size(); ++i)
      if (iso.intervals[i].intersects(enc)) hits.push_back(i);
    if (hits.size() == 1) {
      const QIv& root_iv = iso.intervals[hits[0]];
      // Tighten to an interval that still isolates: intersect enclosure info.
      return AlgNum(mp, root_iv);
    }
    refine_root(theta_chain, theta_iv, 16);
    for (auto& iv : iso.intervals) refine_root(mpc, iv, 16);
    prec *= 2;
  }
  throw std::logic_error("failed to match value to a root of its minimal polynomial");
}

}  // namespace ruled
