#include "ruled/scalar.hpp"

#include <cctype>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ruled {

field_mismatch::field_mismatch(long d1, long d2)
    : std::invalid_argument("cannot combine values from Q(sqrt(" + std::to_string(d1) +
                            ")) and Q(sqrt(" + std::to_string(d2) + "))") {}

namespace {

// d must be >= 2 and carry no square factor we can find by trial division.
void check_quad_d(long d) {
  if (d < 2) throw std::invalid_argument("sqrt argument must be an integer >= 2");
  for (long p = 2; p * p <= d && p <= 1000000L; ++p) {
    if (d % (p * p) == 0)
      throw std::invalid_argument("sqrt argument must be squarefree, got " + std::to_string(d));
  }
}

}  // namespace

Scalar::Scalar(mpq_class a, mpq_class b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (b_ == 0) {
    d_ = 0;
  } else {
    check_quad_d(d_);
  }
  a_.canonicalize();
  b_.canonicalize();
}

Scalar::Scalar(long num, long den) : a_(num, den), b_(0), d_(0) {
  if (den == 0) throw std::domain_error("zero denominator");
  a_.canonicalize();
}

Scalar Scalar::sqrt_of(long d) {
  check_quad_d(d);
  return Scalar(mpq_class(0), mpq_class(1), d);
}

Scalar Scalar::from_decimal(const std::string& digits) {
  auto dot = digits.find('.');
  std::string whole = digits;
  std::string frac;
  if (dot != std::string::npos) {
    whole = digits.substr(0, dot);
    frac = digits.substr(dot + 1);
  }
  bool neg = !whole.empty() && whole[0] == '-';
  if (neg || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
  if (whole.empty()) whole = "0";
  for (char c : whole + frac)
    if (!isdigit(static_cast<unsigned char>(c))) throw std::invalid_argument("bad decimal: " + digits);
  mpz_class num(whole + frac);
  mpz_class den(1);
  for (size_t i = 0; i < frac.size(); ++i) den *= 10;
  mpq_class q(num, den);
  q.canonicalize();
  if (neg) q = -q;
  return Scalar(q);
}

void Scalar::merge_field(const Scalar& o) {
  if (d_ == o.d_) return;
  if (d_ == 0) {
    d_ = o.d_;
    return;
  }
  if (o.d_ == 0) return;
  throw field_mismatch(d_, o.d_);
}

int Scalar::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with d*b^2; equality would make sqrt(d) rational.
  mpq_class lhs = a_ * a_, rhs = b_ * b_ * d_;
  int c = cmp(lhs, rhs);
  if (c == 0) throw std::logic_error("non-squarefree field discriminant slipped through");
  return c > 0 ? sa : sb;
}

Scalar Scalar::operator-() const { return Scalar(-a_, -b_, d_); }

Scalar& Scalar::operator+=(const Scalar& o) {
  merge_field(o);
  a_ += o.a_;
  b_ += o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  merge_field(o);
  a_ -= o.a_;
  b_ -= o.b_;
  if (b_ == 0) d_ = 0;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  merge_field(o);
  mpq_class na = a_ * o.a_ + b_ * o.b_ * d_;
  mpq_class nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  if (b_ == 0) d_ = 0;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_ == 0) return Scalar(mpq_class(1) / a_);
  mpq_class nrm = a_ * a_ - b_ * b_ * d_;  // nonzero: sqrt(d) irrational
  return Scalar(a_ / nrm, -b_ / nrm, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool Scalar::operator==(const Scalar& o) const {
  if (d_ != 0 && o.d_ != 0 && d_ != o.d_) throw field_mismatch(d_, o.d_);
  return a_ == o.a_ && b_ == o.b_;
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  Scalar diff = *this;
  diff -= o;
  int s = diff.sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool rational_sqrt(const mpq_class& q, mpq_class& root) {
  if (q < 0) return false;
  mpz_class rn, rd;
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0) return false;
  mpz_sqrt(rn.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), q.get_den().get_mpz_t());
  root = mpq_class(rn, rd);
  return true;
}

bool Scalar::sqrt_in_field(Scalar& root, long ambient_d) const {
  if (sign() < 0) return false;
  if (b_ == 0) {
    mpq_class r;
    if (rational_sqrt(a_, r)) {
      root = Scalar(r);
      return true;
    }
    // A positive rational can also be (y*sqrt(d))^2 = y^2 d in Q(sqrt(d)).
    if (ambient_d >= 2 && a_ != 0 && rational_sqrt(a_ / ambient_d, r)) {
      root = Scalar(mpq_class(0), r, ambient_d);
      return true;
    }
    return false;
  }
  // (x + y*sqrt(d))^2 = x^2 + d y^2 + 2xy sqrt(d) = a + b sqrt(d).
  // Solve x^2 + d y^2 = a, 2xy = b exactly: x^2 is a root of
  // z^2 - a z + d b^2/4 = 0, so z = (a +- sqrt(a^2 - d b^2))/2 rational.
  mpq_class disc = a_ * a_ - b_ * b_ * d_;
  mpq_class sd;
  if (!rational_sqrt(disc, sd)) return false;
  for (int pick = 0; pick < 2; ++pick) {
    mpq_class z = (pick == 0) ? mpq_class((a_ + sd) / 2) : mpq_class((a_ - sd) / 2);
    mpq_class x;
    if (z >= 0 && rational_sqrt(z, x) && x != 0) {
      mpq_class y = b_ / (2 * x);
      Scalar cand(x, y, d_);
      if (cand * cand == *this) {
        root = cand.sign() >= 0 ? cand : -cand;
        return true;
      }
    }
  }
  return false;
}

namespace {

std::string q_str(const mpq_class& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string Scalar::str() const {
  if (b_ == 0) return q_str(a_);
  std::string radical = "sqrt(" + std::to_string(d_) + ")";
  std::string bs;
  if (b_ == 1)
    bs = radical;
  else if (b_ == -1)
    bs = "-" + radical;
  else
    bs = q_str(b_) + "*" + radical;
  if (a_ == 0) return bs;
  if (sgn(b_) > 0) return q_str(a_) + "+" + bs;
  return q_str(a_) + bs;  // bs already carries the minus
}

double Scalar::approx() const {
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(static_cast<double>(d_));
  return v;
}

Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

Scalar quadratic_unit(long d) {
  static std::map<long, Scalar> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  if (d <= 1) throw std::invalid_argument("quadratic_unit: d must exceed 1");
  mpz_class D(static_cast<long>(d)), a0;
  mpz_sqrt(a0.get_mpz_t(), D.get_mpz_t());
  if (a0 * a0 == D) throw std::invalid_argument("quadratic_unit: square d");
  // Convergents p/q of the continued fraction of sqrt(d); the first one with
  // p^2 - d*q^2 = +-1 is the fundamental solution.
  mpz_class m(0), den(1), a(a0);
  mpz_class pm1(1), p(a0), qm1(0), q(1);
  for (int iter = 0; iter < 100000; ++iter) {
    mpz_class t = p * p - D * q * q;
    if (t == 1 || t == -1) {
      Scalar u(mpq_class(p), mpq_class(q), d);
      cache.emplace(d, u);
      return u;
    }
    m = den * a - m;
    den = (D - m * m) / den;
    a = (a0 + m) / den;
    mpz_class p1 = a * p + pm1, q1 = a * q + qm1;
    pm1 = p;
    qm1 = q;
    p = p1;
    q = q1;
  }
  throw std::runtime_error("quadratic_unit: period not found");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace ruled
