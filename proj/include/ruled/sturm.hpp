#pragma once

#include <vector>

#include "ruled/interval.hpp"
#include "ruled/poly.hpp"

namespace ruled {

// Sturm chain of the squarefree part of p.  Coefficients may live in a real
// quadratic field; sign evaluations are exact.
class SturmChain {
 public:
  explicit SturmChain(const UniPoly& p);

  const UniPoly& squarefree() const { return sf_; }

  // Number of real roots in (a, b], a <= b.
  int count(const mpq_class& a, const mpq_class& b) const;
  int count_all() const;  // all real roots

  // An upper bound B with all real roots in (-B, B).
  mpq_class root_bound() const;

 private:
  int variations(const mpq_class& x) const;
  UniPoly sf_;
  std::vector<UniPoly> chain_;
};

// Isolating intervals for the distinct real roots of p, sorted increasing.
// Every interval has non-root endpoints and contains exactly one root of the
// squarefree part.  The squarefree part is returned alongside.
struct RootIsolation {
  UniPoly squarefree;
  std::vector<QIv> intervals;
};

RootIsolation sturm_isolate(const UniPoly& p);

// Halve iv (keeping its single root of sf, whose chain is given) `steps` times.
void refine_root(const SturmChain& chain, QIv& iv, int steps);

}  // namespace ruled
