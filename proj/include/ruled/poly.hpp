#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ruled/scalar.hpp"

namespace ruled {

// Dense univariate polynomial over a commutative ring R.
// Coefficients ascending; invariant: no trailing zero, so deg() == -1
// exactly for the zero polynomial.
template <class R>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(const R& c0) { c_.push_back(c0); trim(); }  // NOLINT: constant poly

  static Poly var() { return Poly(std::vector<R>{R(0), R(1)}); }
  static Poly monomial(const R& c, int e) {
    std::vector<R> v(e + 1, R(0));
    v[e] = c;
    return Poly(std::move(v));
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<R>& coeffs() const { return c_; }
  R coeff(int i) const { return (i >= 0 && i <= deg()) ? c_[i] : R(0); }
  const R& lead() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Poly& operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), R(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }

  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<R> r(c_.size() + o.c_.size() - 1, R(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(r));
  }

  Poly& operator*=(const R& s) {
    for (auto& c : c_) c = c * s;
    trim();
    return *this;
  }

  // multiply by t^e
  Poly shifted(int e) const {
    if (is_zero()) return Poly();
    std::vector<R> r(c_.size() + e, R(0));
    std::copy(c_.begin(), c_.end(), r.begin() + e);
    return Poly(std::move(r));
  }

  Poly derivative() const {
    if (deg() <= 0) return Poly();
    std::vector<R> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<long>(i));
    return Poly(std::move(r));
  }

  template <class X>
  X eval(const X& x) const {  // Horner; X must absorb R via X = X*X + R-cast
    if (is_zero()) return X(0);
    X acc(c_.back());
    for (int i = deg() - 1; i >= 0; --i) acc = acc * x + X(c_[i]);
    return acc;
  }

  // Substitute t -> another polynomial.
  Poly compose(const Poly& inner) const {
    Poly acc;
    for (int i = deg(); i >= 0; --i) {
      acc = acc * inner;
      acc += Poly(c_[i]);
    }
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == R(0)) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
Poly<R> operator+(Poly<R> a, const Poly<R>& b) { return a += b; }
template <class R>
Poly<R> operator-(Poly<R> a, const Poly<R>& b) { return a -= b; }
template <class R>
Poly<R> operator*(Poly<R> a, const R& s) { return a *= s; }

using UniPoly = Poly<Scalar>;

// ---- field-coefficient operations (Scalar only) ----

// Euclidean division: a = q*b + r with deg r < deg b.  Throws on b == 0.
void divrem(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
UniPoly exact_div(const UniPoly& a, const UniPoly& b);  // throws if remainder != 0
UniPoly rem(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0,0) == 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& a);
UniPoly squarefree_part(const UniPoly& a);

// Extended gcd: returns monic g = gcd(a,b) and fills s,t with s*a + t*b = g.
UniPoly poly_xgcd(const UniPoly& a, const UniPoly& b, UniPoly& s, UniPoly& t);

// gcd of the coefficients' rational content over Q (d-part included pairwise);
// scale so coefficients become "primitive integer" (used to tame growth).
UniPoly primitive_scaled(const UniPoly& a);

std::string poly_str(const UniPoly& p, const std::string& var = "t");

// gcd over several polynomials
UniPoly gcd_all(const std::vector<UniPoly>& v);

// Rational function num/den over Scalar, reduced, den monic and nonzero.
class RatFunc {
 public:
  RatFunc() : num_(), den_(UniPoly(Scalar(1))) {}
  RatFunc(UniPoly num, UniPoly den);
  RatFunc(const Scalar& c) : RatFunc(UniPoly(c), UniPoly(Scalar(1))) {}  // NOLINT
  static RatFunc var() { return RatFunc(UniPoly::var(), UniPoly(Scalar(1))); }

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.deg() == 0; }

  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }

  Scalar eval(const Scalar& x) const;  // throws domain_error at poles
  bool defined_at(const Scalar& x) const { return !(den_.eval(x) == Scalar(0)); }

  std::string str(const std::string& var = "t") const;

 private:
  UniPoly num_, den_;
};

}  // namespace ruled
