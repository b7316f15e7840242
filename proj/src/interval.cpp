#include "ruled/interval.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ruled {

QIv::QIv(mpq_class l, mpq_class h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

std::string QIv::str() const {
  std::ostringstream os;
  os << "[" << lo << ", " << hi << "]";
  return os.str();
}

QIv qiv_add(const QIv& a, const QIv& b) { return QIv(a.lo + b.lo, a.hi + b.hi); }
QIv qiv_sub(const QIv& a, const QIv& b) { return QIv(a.lo - b.hi, a.hi - b.lo); }
QIv qiv_neg(const QIv& a) { return QIv(-a.hi, -a.lo); }

QIv qiv_mul(const QIv& a, const QIv& b) {
  mpq_class p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  mpq_class lo = std::min(std::min(p1, p2), std::min(p3, p4));
  mpq_class hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return QIv(std::move(lo), std::move(hi));
}

QIv sqrt_enclosure(long d, int prec_bits) {
  // Bisection on x^2 = d starting from [1, d]; each step halves the width.
  static std::map<long, QIv> cache;  // best enclosure seen so far per d
  auto it = cache.find(d);
  QIv iv = (it != cache.end()) ? it->second : QIv(mpq_class(1), mpq_class(d));
  mpq_class target(1);
  target >>= prec_bits;
  while (iv.width() > target) {
    mpq_class m = iv.mid();
    if (m * m <= d)
      iv.lo = m;
    else
      iv.hi = m;
  }
  cache[d] = iv;
  return iv;
}

QIv scalar_enclosure(const Scalar& s, int prec_bits) {
  QIv iv = QIv::point(s.rat_part());
  if (s.quad_part() != 0) {
    QIv r = sqrt_enclosure(s.field_d(), prec_bits);
    iv = qiv_add(iv, qiv_mul(QIv::point(s.quad_part()), r));
  }
  return iv;
}

namespace {

// Simplest rational in [lo, hi], 0 < lo <= hi, via the Stern-Brocot walk.
mpq_class simplest_pos(const mpq_class& lo, const mpq_class& hi) {
  mpz_class cl;
  mpz_cdiv_q(cl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  if (mpq_class(cl) <= hi) return mpq_class(cl);  // an integer fits
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
  mpq_class flo = lo - mpq_class(f), fhi = hi - mpq_class(f);  // 0 < flo <= fhi < 1
  mpq_class inner = simplest_pos(mpq_class(1) / fhi, mpq_class(1) / flo);
  return mpq_class(f) + 1 / inner;
}

}  // namespace

mpq_class simplest_in(const mpq_class& lo, const mpq_class& hi) {
  if (lo > hi) throw std::invalid_argument("simplest_in: empty interval");
  if (lo <= 0 && 0 <= hi) return mpq_class(0);
  if (hi < 0) return -simplest_pos(-hi, -lo);
  return simplest_pos(lo, hi);
}

}  // namespace ruled
