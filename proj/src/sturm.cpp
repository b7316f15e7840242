#include "ruled/sturm.hpp"

#include <stdexcept>

namespace ruled {

SturmChain::SturmChain(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of zero polynomial");
  sf_ = squarefree_part(p);
  chain_.push_back(sf_);
  if (sf_.deg() >= 1) {
    chain_.push_back(sf_.derivative());
    while (chain_.back().deg() >= 1) {
      UniPoly r = rem(chain_[chain_.size() - 2], chain_.back());
      if (r.is_zero()) break;  // cannot happen for squarefree input, kept defensive
      // Only positive rescaling preserves the sign variation count.
      UniPoly q = -r;
      int sgn = q.lead().sign();
      q = primitive_scaled(q);  // normalizes the lead positive
      if (sgn < 0) q = q * Scalar(-1);
      chain_.push_back(q);
    }
  }
}

int SturmChain::variations(const mpq_class& x) const {
  int v = 0, prev = 0;
  Scalar sx{mpq_class(x)};
  for (const auto& q : chain_) {
    int s = q.eval(sx).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

int SturmChain::count(const mpq_class& a, const mpq_class& b) const {
  if (a > b) throw std::invalid_argument("count: endpoints out of order");
  return variations(a) - variations(b);
}

mpq_class SturmChain::root_bound() const {
  // Cauchy bound 1 + max |a_i| / |a_n| via exact interval enclosures.
  if (sf_.deg() <= 0) return mpq_class(1);
  for (int prec = 32;; prec *= 2) {
    QIv lead = scalar_enclosure(sf_.lead(), prec);
    mpq_class lead_abs_lo;
    if (lead.lo > 0)
      lead_abs_lo = lead.lo;
    else if (lead.hi < 0)
      lead_abs_lo = -lead.hi;
    else
      continue;  // enclosure still straddles zero; refine
    mpq_class m(0);
    for (int i = 0; i < sf_.deg(); ++i) {
      QIv ci = scalar_enclosure(sf_.coeff(i), prec);
      mpq_class hi = std::max(abs(ci.lo), abs(ci.hi));
      m = std::max(m, hi);
    }
    return 1 + m / lead_abs_lo;
  }
}

int SturmChain::count_all() const {
  mpq_class b = root_bound();
  return count(-b, b);
}

RootIsolation sturm_isolate(const UniPoly& p) {
  SturmChain chain(p);
  RootIsolation out;
  out.squarefree = chain.squarefree();
  if (out.squarefree.deg() <= 0) return out;
  mpq_class bound = chain.root_bound();

  // Pick an interior split point that is not a root.
  auto split_point = [&](const mpq_class& lo, const mpq_class& hi) {
    int slices = out.squarefree.deg() + 2;
    for (int j = 1; j < slices; ++j) {
      mpq_class m = lo + (hi - lo) * j / slices;
      if (!(out.squarefree.eval(Scalar(m)) == Scalar(0))) return m;
    }
    throw std::logic_error("no non-root split point found");
  };

  struct Seg {
    mpq_class lo, hi;
    int n;
  };
  std::vector<Seg> work{{-bound, bound, chain.count(-bound, bound)}};
  std::vector<QIv> found;
  while (!work.empty()) {
    Seg s = work.back();
    work.pop_back();
    if (s.n == 0) continue;
    if (s.n == 1) {
      found.push_back(QIv(s.lo, s.hi));
      continue;
    }
    mpq_class m = split_point(s.lo, s.hi);
    int left = chain.count(s.lo, m);
    work.push_back({s.lo, m, left});
    work.push_back({m, s.hi, s.n - left});
  }
  std::sort(found.begin(), found.end(), [](const QIv& a, const QIv& b) { return a.lo < b.lo; });
  // Bisection leaves neighbours touching at the split point; shrink until the
  // closed intervals are pairwise disjoint.
  for (size_t i = 0; i + 1 < found.size(); ++i) {
    while (found[i].hi >= found[i + 1].lo) {
      refine_root(chain, found[i], 1);
      refine_root(chain, found[i + 1], 1);
    }
  }
  // Tight intervals are cheap here and save refinement rounds downstream.
  for (auto& iv : found)
    while (iv.width() > mpq_class(1, 4)) refine_root(chain, iv, 1);
  out.intervals = std::move(found);
  return out;
}

void refine_root(const SturmChain& chain, QIv& iv, int steps) {
  const UniPoly& sf = chain.squarefree();
  for (int i = 0; i < steps; ++i) {
    mpq_class m = iv.mid();
    Scalar v = sf.eval(Scalar(m));
    if (v.is_zero()) {
      // Rational root hit exactly; shrink symmetrically around it.
      mpq_class w = iv.width() / 4;
      if (w == 0) return;
      mpq_class lo = m - w, hi = m + w;
      if (chain.count(lo, hi) == 1 && !(sf.eval(Scalar(lo)) == Scalar(0)) &&
          !(sf.eval(Scalar(hi)) == Scalar(0))) {
        iv = QIv(lo, hi);
        continue;
      }
      return;  // keep current interval rather than risk losing the root
    }
    if (chain.count(iv.lo, m) == 1)
      iv = QIv(iv.lo, m);
    else
      iv = QIv(m, iv.hi);
  }
}

}  // namespace ruled
