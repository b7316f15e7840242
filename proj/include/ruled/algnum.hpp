#pragma once

#include <memory>
#include <string>

#include "ruled/interval.hpp"
#include "ruled/poly.hpp"
#include "ruled/sturm.hpp"

namespace ruled {

// Real algebraic number: a squarefree rational polynomial that vanishes on it
// (not necessarily irreducible) plus an isolating interval with rational
// endpoints containing exactly that one root.  All decisions are exact.
class AlgNum {
 public:
  AlgNum(UniPoly minpoly_candidate, QIv isolating);

  const UniPoly& minpoly() const { return mp_; }
  QIv interval() const { return iv_; }
  void refine(int steps) const;
  mpq_class width() const { return iv_.width(); }

  int sign() const;
  bool equals(const AlgNum& o) const;
  int compare(const AlgNum& o) const;  // -1, 0, +1

  // Exact equality against a field element.
  bool equals_scalar(const Scalar& s) const;

  // Recognize the value as rational or as a + b*sqrt(ambient_d); exact when
  // it succeeds.  Returns false for genuinely higher-degree values (or when
  // the reconstruction cap is hit on enormous coordinates).
  bool to_scalar(Scalar& out, long ambient_d = 0) const;

  double approx() const;
  std::string str() const;

 private:
  const SturmChain& chain() const;
  UniPoly mp_;  // squarefree, primitive integer, plain rational coefficients
  mutable QIv iv_;
  mutable std::shared_ptr<SturmChain> chain_;
};

// Q-minimal-polynomial candidate (squarefree, primitive) of the value h(theta)
// where theta is a root of g; g may have coefficients in Q(sqrt(d)).  Computed
// as the characteristic polynomial of multiplication by h in the quotient ring,
// via exact Newton identities, then made squarefree.
UniPoly minpoly_candidate_of_value(const UniPoly& h, const UniPoly& g);

// Enclosure of h(theta) given an enclosure of theta.
QIv value_enclosure(const UniPoly& h, const QIv& theta_iv, int prec_bits = 64);

// Package h(theta) as an AlgNum; theta_chain is the Sturm chain of g and
// theta_iv its isolating interval (refined in place as needed).
AlgNum algnum_of_value(const UniPoly& h, const UniPoly& g, const SturmChain& theta_chain,
                       QIv& theta_iv);

}  // namespace ruled
