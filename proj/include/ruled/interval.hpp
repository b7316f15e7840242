#pragma once

#include <gmpxx.h>

#include <string>

#include "ruled/scalar.hpp"

namespace ruled {

// Closed interval with exact rational endpoints, lo <= hi.
struct QIv {
  mpq_class lo, hi;

  QIv() : lo(0), hi(0) {}
  QIv(mpq_class l, mpq_class h);
  static QIv point(const mpq_class& x) { return QIv(x, x); }

  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool is_point() const { return lo == hi; }
  mpq_class width() const { return hi - lo; }
  mpq_class mid() const { return (lo + hi) / 2; }
  bool intersects(const QIv& o) const { return !(hi < o.lo || o.hi < lo); }
  bool contains(const mpq_class& x) const { return lo <= x && x <= hi; }

  std::string str() const;
};

QIv qiv_add(const QIv& a, const QIv& b);
QIv qiv_sub(const QIv& a, const QIv& b);
QIv qiv_mul(const QIv& a, const QIv& b);
QIv qiv_neg(const QIv& a);

// Enclosure of sqrt(d) with width <= 1/2^prec_bits (d >= 2).
QIv sqrt_enclosure(long d, int prec_bits);

// Enclosure of a Scalar value.
QIv scalar_enclosure(const Scalar& s, int prec_bits = 64);

// Simplest rational (minimal denominator, then minimal |numerator|) in [lo, hi].
mpq_class simplest_in(const mpq_class& lo, const mpq_class& hi);

}  // namespace ruled
