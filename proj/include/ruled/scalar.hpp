#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace ruled {

// Element of Q or of a real quadratic field Q(sqrt(d)), stored as a + b*sqrt(d)
// with exact rational a, b.  d == 0 marks a plain rational (then b == 0).
// d, when nonzero, is a squarefree integer >= 2, fixed per computation;
// combining values whose nonzero d differ throws field_mismatch.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(long n) : a_(n), b_(0), d_(0) {}       // NOLINT: implicit by design
  Scalar(mpq_class a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
  Scalar(mpq_class a, mpq_class b, long d);
  Scalar(long num, long den);

  // sqrt(d) itself; validates d (>= 2, no small square factor).
  static Scalar sqrt_of(long d);
  static Scalar from_decimal(const std::string& digits);  // exact binary-less parse of "12.34"

  const mpq_class& rat_part() const { return a_; }
  const mpq_class& quad_part() const { return b_; }
  long field_d() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_one() const { return b_ == 0 && a_ == 1; }
  bool is_rational() const { return d_ == 0; }
  bool is_integer() const { return d_ == 0 && a_.get_den() == 1; }

  // Exact sign of the real number a + b*sqrt(d).
  int sign() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  Scalar inv() const;  // throws std::domain_error on zero
  Scalar conj() const { return Scalar(a_, -b_, d_); }  // a - b*sqrt(d)
  Scalar abs() const { return sign() >= 0 ? *this : -*this; }

  bool operator==(const Scalar& o) const;
  std::strong_ordering operator<=>(const Scalar& o) const;

  // If *this is the square of a field element, return true and set root
  // (the nonnegative root).  Exact.  ambient_d widens the search to
  // Q(sqrt(ambient_d)) when *this is plain rational.
  bool sqrt_in_field(Scalar& root, long ambient_d = 0) const;

  std::string str() const;  // "3/4", "1/2-3/8*sqrt(3)", canonical
  double approx() const;

 private:
  void merge_field(const Scalar& o);  // unify d tags, throws on conflict
  mpq_class a_, b_;
  long d_;
};

Scalar operator+(Scalar x, const Scalar& y);
Scalar operator-(Scalar x, const Scalar& y);
Scalar operator*(Scalar x, const Scalar& y);
Scalar operator/(Scalar x, const Scalar& y);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Thrown when values from distinct quadratic fields meet.
struct field_mismatch : std::invalid_argument {
  field_mismatch(long d1, long d2);
};

// True if n is exactly p^2 * d with d squarefree; used by sqrt_in_field.
bool rational_sqrt(const mpq_class& q, mpq_class& root);

// Smallest unit greater than one of Z[sqrt(d)], i.e. the minimal solution of
// x^2 - d*y^2 = +-1 with x, y > 0, found via the continued fraction of
// sqrt(d). Requires d > 1 and nonsquare.
Scalar quadratic_unit(long d);

}  // namespace ruled
