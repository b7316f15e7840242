#include "ruled/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <list>

namespace ruled {

long default_budget() {
  if (const char* env = std::getenv("RULED_EQUIV_BUDGET")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10'000'000L;
}

namespace {

// Reduces f against G up to a nonzero constant factor. The reduction is
// fraction-free: instead of dividing by the reducer's leading coefficient the
// remainder is scaled by it, since dividing repeatedly makes quadratic-field
// coefficients swell (every division drags in a conjugate and a field norm).
// Accumulated content is stripped every few steps. All callers either test
// for zero or renormalize the result, so the constant factor never escapes.
MultiPoly normal_form_ptrs(const MultiPoly& f, const std::vector<const MultiPoly*>& G,
                           BudgetCounter& budget) {
  MultiPoly work = f;
  std::vector<Term> done;
  int since_strip = 0;
  // Emitted monomials are lex-greater than everything left in work, so the
  // two halves never share a monomial and can be renormalized as one
  // polynomial, keeping their relative scale intact.
  auto strip = [&] {
    std::vector<Term> all = done;
    for (const auto& t : work.terms()) all.push_back(t);
    MultiPoly comb = MultiPoly::from_terms(std::move(all)).balanced_scaled();
    const auto& ct = comb.terms();
    size_t nd = done.size();
    done.assign(ct.begin(), ct.begin() + nd);
    work = MultiPoly::from_terms(
        std::vector<Term>(ct.begin() + nd, ct.end()));
  };
  while (!work.is_zero()) {
    const Term& t = work.lt();
    const MultiPoly* red = nullptr;
    for (const auto* g : G) {
      if (!g->is_zero() && mono_divides(g->lm(), t.m)) {
        red = g;
        break;
      }
    }
    if (red) {
      budget.step();
      Term q{mono_div(t.m, red->lm()), t.c};
      const Scalar& rl = red->lc();
      work = work.mul_scalar(rl) - red->mul_term(q);
      for (auto& d : done) d.c = d.c * rl;
      if (++since_strip >= 16) {
        strip();
        since_strip = 0;
      }
    } else {
      done.push_back(t);
      work = work - MultiPoly::from_terms({t});
    }
  }
  return MultiPoly::from_terms(std::move(done));
}

}  // namespace

MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G, BudgetCounter& budget) {
  std::vector<const MultiPoly*> ptrs;
  ptrs.reserve(G.size());
  for (const auto& g : G) ptrs.push_back(&g);
  return normal_form_ptrs(f, ptrs, budget);
}

namespace {

struct Pair {
  size_t i, j;
  Mono lcm;
  int sugar;
  int lcm_deg;
};

struct Entry {
  MultiPoly p;
  int sugar;
  bool alive = true;
};

bool pair_less(const Pair& a, const Pair& b) {
  if (a.sugar != b.sugar) return a.sugar < b.sugar;
  if (a.lcm_deg != b.lcm_deg) return a.lcm_deg < b.lcm_deg;
  return mono_lex_greater(b.lcm, a.lcm);
}

// Gebauer-Moeller update: add pairs of the new element (index t) against the
// current basis, pruning by the multiple, equal-lcm, coprime and chain rules.
void update_pairs(std::vector<Entry>& basis, std::list<Pair>& pairs, size_t t) {
  const Mono& lt_new = basis[t].p.lm();
  std::vector<Pair> fresh;
  for (size_t i = 0; i < t; ++i) {
    if (!basis[i].alive) continue;
    Mono l = mono_lcm(basis[i].p.lm(), lt_new);
    int ld = mono_total_deg(l);
    int sug = std::max(basis[i].sugar + ld - mono_total_deg(basis[i].p.lm()),
                       basis[t].sugar + ld - mono_total_deg(lt_new));
    fresh.push_back(Pair{i, t, l, sug, ld});
  }
  // Multiple rule: drop (i,t) when another new pair's lcm strictly divides.
  std::vector<bool> drop(fresh.size(), false);
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (size_t b = 0; b < fresh.size(); ++b) {
      if (a == b || drop[b]) continue;
      if (mono_divides(fresh[b].lcm, fresh[a].lcm) && !(fresh[b].lcm == fresh[a].lcm)) {
        drop[a] = true;
        break;
      }
    }
  }
  // Equal-lcm rule: keep a single representative among equal lcms.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (drop[a]) continue;
    for (size_t b = a + 1; b < fresh.size(); ++b) {
      if (!drop[b] && fresh[a].lcm == fresh[b].lcm) drop[b] = true;
    }
  }
  // Coprime rule: S-polynomials of coprime leading monomials reduce to zero.
  for (size_t a = 0; a < fresh.size(); ++a) {
    if (!drop[a] && mono_coprime(basis[fresh[a].i].p.lm(), lt_new)) drop[a] = true;
  }
  // Chain rule on the old pair set.
  for (auto it = pairs.begin(); it != pairs.end();) {
    const Mono& l = it->lcm;
    if (mono_divides(lt_new, l) && !(mono_lcm(basis[it->i].p.lm(), lt_new) == l) &&
        !(mono_lcm(basis[it->j].p.lm(), lt_new) == l)) {
      it = pairs.erase(it);
    } else {
      ++it;
    }
  }
  for (size_t a = 0; a < fresh.size(); ++a)
    if (!drop[a]) pairs.push_back(fresh[a]);
}

}  // namespace

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, BudgetCounter& budget) {
  std::vector<Entry> basis;
  std::list<Pair> pairs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    MultiPoly p = g.balanced_scaled();
    // Skip exact duplicates.
    bool dup = false;
    for (const auto& e : basis) dup = dup || e.p == p;
    if (dup) continue;
    basis.push_back(Entry{p, p.total_degree()});
    update_pairs(basis, pairs, basis.size() - 1);
  }

  std::vector<const MultiPoly*> alive;
  auto rebuild_alive = [&] {
    alive.clear();
    for (const auto& e : basis)
      if (e.alive) alive.push_back(&e.p);
  };
  rebuild_alive();

  while (!pairs.empty()) {
    auto best = pairs.begin();
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it)
      if (pair_less(*it, *best)) best = it;
    Pair pr = *best;
    pairs.erase(best);
    const MultiPoly &f = basis[pr.i].p, &g = basis[pr.j].p;
    // cross-multiplied leading coefficients keep the S-polynomial
    // fraction-free (it is only defined up to a constant anyway)
    Term tf{mono_div(pr.lcm, f.lm()), g.lc()};
    Term tg{mono_div(pr.lcm, g.lm()), f.lc()};
    MultiPoly s = f.mul_term(tf) - g.mul_term(tg);
    budget.step();
    MultiPoly r = normal_form_ptrs(s, alive, budget);
    if (r.is_zero()) continue;
    r = r.balanced_scaled();
    basis.push_back(Entry{r, pr.sugar});
    update_pairs(basis, pairs, basis.size() - 1);
    rebuild_alive();
  }

  // Minimalize and inter-reduce.
  std::vector<MultiPoly> min;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].alive) continue;
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !basis[j].alive) continue;
      if (mono_divides(basis[j].p.lm(), basis[i].p.lm()) &&
          !(basis[j].p.lm() == basis[i].p.lm() && j > i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) min.push_back(basis[i].p);
  }
  std::vector<MultiPoly> reduced;
  for (size_t i = 0; i < min.size(); ++i) {
    std::vector<MultiPoly> others;
    for (size_t j = 0; j < min.size(); ++j)
      if (j != i) others.push_back(min[j]);
    MultiPoly r = normal_form(min[i], others, budget);
    if (!r.is_zero()) reduced.push_back(r.monic_scaled());
  }
  std::sort(reduced.begin(), reduced.end(),
            [](const MultiPoly& a, const MultiPoly& b) { return mono_lex_greater(b.lm(), a.lm()); });
  return reduced;
}

std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens) {
  BudgetCounter budget(default_budget());
  return buchberger(gens, budget);
}

bool is_ideal_member(const MultiPoly& f, const std::vector<MultiPoly>& gb, BudgetCounter& budget) {
  return normal_form(f, gb, budget).is_zero();
}

namespace {

bool is_independent(const std::vector<Mono>& lms, unsigned mask,
                    const std::vector<Var>& ring_vars) {
  // T independent iff no leading monomial involves only variables of T.
  for (const auto& m : lms) {
    bool inside = true;
    for (int v = 0; v < kNumVars && inside; ++v) {
      if (!m[v]) continue;
      bool in_T = false;
      for (size_t s = 0; s < ring_vars.size(); ++s)
        if (static_cast<int>(ring_vars[s]) == v && (mask >> s & 1)) in_T = true;
      if (!in_T) inside = false;
    }
    if (inside) return false;  // this lm lives entirely inside T
  }
  return true;
}

}  // namespace

int ideal_dimension(const std::vector<MultiPoly>& gb, const std::vector<Var>& ring_vars) {
  for (const auto& g : gb)
    if (!g.is_zero() && g.is_constant()) return -1;
  std::vector<Mono> lms;
  for (const auto& g : gb)
    if (!g.is_zero()) lms.push_back(g.lm());
  int best = 0;
  size_t n = ring_vars.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    if (is_independent(lms, mask, ring_vars)) best = size;
  }
  return best;
}

std::vector<Var> independent_vars(const std::vector<MultiPoly>& gb,
                                  const std::vector<Var>& ring_vars) {
  std::vector<Mono> lms;
  for (const auto& g : gb)
    if (!g.is_zero()) lms.push_back(g.lm());
  int dim = ideal_dimension(gb, ring_vars);
  if (dim <= 0) return {};
  size_t n = ring_vars.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != dim) continue;
    if (is_independent(lms, mask, ring_vars)) {
      std::vector<Var> out;
      for (size_t s = 0; s < n; ++s)
        if (mask >> s & 1) out.push_back(ring_vars[s]);
      return out;
    }
  }
  return {};
}

}  // namespace ruled
