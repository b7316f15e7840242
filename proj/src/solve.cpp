#include "ruled/solve.hpp"

#include <algorithm>
#include <sstream>

#include "ruled/sturm.hpp"

namespace ruled {

bool solve_value_is_scalar(const SolveValue& v) { return std::holds_alternative<Scalar>(v); }

const Scalar& solve_value_scalar(const SolveValue& v) { return std::get<Scalar>(v); }

double solve_value_approx(const SolveValue& v) {
  if (solve_value_is_scalar(v)) return std::get<Scalar>(v).approx();
  return std::get<AlgNum>(v).approx();
}

std::string solve_value_str(const SolveValue& v) {
  if (solve_value_is_scalar(v)) return std::get<Scalar>(v).str();
  return std::get<AlgNum>(v).str();
}

bool solve_values_equal(const SolveValue& a, const SolveValue& b) {
  if (solve_value_is_scalar(a) && solve_value_is_scalar(b))
    return std::get<Scalar>(a) == std::get<Scalar>(b);
  if (solve_value_is_scalar(a)) return std::get<AlgNum>(b).equals_scalar(std::get<Scalar>(a));
  if (solve_value_is_scalar(b)) return std::get<AlgNum>(a).equals_scalar(std::get<Scalar>(b));
  return std::get<AlgNum>(a).equals(std::get<AlgNum>(b));
}

bool SolutionPoint::all_scalar() const {
  for (const auto& [v, val] : coords)
    if (!solve_value_is_scalar(val)) return false;
  return true;
}

std::string SolutionPoint::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, val] : coords) {
    if (!first) os << ", ";
    first = false;
    os << var_name(v) << "=" << solve_value_str(val);
  }
  os << "}";
  return os.str();
}

std::vector<Var> vars_of(const std::vector<MultiPoly>& gb) {
  std::array<bool, kNumVars> seen{};
  for (const auto& p : gb)
    for (const auto& t : p.terms())
      for (int v = 0; v < kNumVars; ++v)
        if (t.m[v]) seen[v] = true;
  std::vector<Var> out;
  for (int v = 0; v < kNumVars; ++v)
    if (seen[v]) out.push_back(static_cast<Var>(v));
  return out;  // ascending enum value = descending solve priority; rank order
}

namespace {

// Signals that back-substitution met a non-linear step over an existing
// extension; the caller retries through a univariate reduction.
struct need_rur {};

// One solution branch: an optional simple extension F[theta]/(g) with theta
// pinned to an isolating interval, and the variables assigned so far as
// polynomials in theta (constants while no extension exists).
struct Branch {
  bool has_ext = false;
  UniPoly g;                       // squarefree modulus, deg >= 1 when has_ext
  QIv iv = QIv::point(mpq_class(0));  // isolates theta among real roots of g
  std::map<Var, UniPoly> vals;
};

bool theta_in_factor(const UniPoly& h, const QIv& iv) {
  if (h.deg() < 1) return false;
  SturmChain ch(h);
  return ch.count(iv.lo, iv.hi) == 1;
}

// Replace the modulus by a divisor that still has theta as a root.
void refine_modulus(Branch& br, const UniPoly& new_g) {
  UniPoly m = monic(new_g);
  if (m.deg() < 1) throw std::logic_error("branch modulus refined to a constant");
  br.g = m;
  for (auto& [v, val] : br.vals) val = rem(val, br.g);
}

UniPoly elem_reduce(const Branch& br, const UniPoly& p) {
  if (!br.has_ext) return p;
  return rem(p, br.g);
}

// Exact zero test of p(theta); may shrink the branch modulus as a side
// effect (dynamic evaluation in place of factorization).
bool elem_is_zero(Branch& br, const UniPoly& p0) {
  UniPoly p = elem_reduce(br, p0);
  if (p.is_zero()) return true;
  if (!br.has_ext) return false;
  UniPoly h = gcd(p, br.g);
  if (h.deg() < 1) return false;
  if (theta_in_factor(h, br.iv)) {
    refine_modulus(br, h);
    return true;
  }
  refine_modulus(br, exact_div(br.g, h));
  return false;
}

UniPoly elem_mul(const Branch& br, const UniPoly& a, const UniPoly& b) {
  return elem_reduce(br, a * b);
}

// Inverse of a nonzero p(theta); callers must have ruled zero out.
UniPoly elem_inv(Branch& br, const UniPoly& p0) {
  UniPoly p = elem_reduce(br, p0);
  if (!br.has_ext) {
    if (p.deg() != 0) throw std::logic_error("inverting zero branch element");
    return UniPoly(Scalar(1) / p.coeff(0));
  }
  UniPoly h = gcd(p, br.g);
  if (h.deg() >= 1) {
    // theta is not a root of h (p(theta) != 0), so it survives in g/h.
    refine_modulus(br, exact_div(br.g, h));
    p = rem(p, br.g);
  }
  UniPoly s, t;
  UniPoly one = poly_xgcd(p, br.g, s, t);
  if (one.deg() != 0) throw std::logic_error("modulus and element share a factor after refinement");
  return rem(s * UniPoly(Scalar(1) / one.coeff(0)), br.g);
}

// Value of a multivariate polynomial whose variables are all assigned.
UniPoly eval_assigned(Branch& br, const MultiPoly& p) {
  UniPoly acc;
  for (const auto& term : p.terms()) {
    UniPoly prod{UniPoly(term.c)};
    for (int v = 0; v < kNumVars; ++v) {
      for (int e = 0; e < term.m[v]; ++e)
        prod = elem_mul(br, prod, br.vals.at(static_cast<Var>(v)));
    }
    acc += prod;
  }
  return elem_reduce(br, acc);
}

// Univariate polynomial over the branch field, coefficients ascending.
using EPoly = std::vector<UniPoly>;

void epoly_trim(Branch& br, EPoly& e) {
  while (!e.empty() && elem_is_zero(br, e.back())) e.pop_back();
  for (auto& c : e) c = elem_reduce(br, c);
}

int epoly_deg(const EPoly& e) { return static_cast<int>(e.size()) - 1; }

EPoly epoly_rem(Branch& br, EPoly a, const EPoly& b) {
  if (b.empty()) throw std::logic_error("epoly division by zero");
  UniPoly inv_lead = elem_inv(br, b.back());
  epoly_trim(br, a);
  while (epoly_deg(a) >= epoly_deg(b)) {
    UniPoly q = elem_mul(br, a.back(), inv_lead);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] -= elem_mul(br, q, b[i]);
    a.pop_back();
    epoly_trim(br, a);
  }
  return a;
}

EPoly epoly_monic(Branch& br, EPoly a) {
  epoly_trim(br, a);
  if (a.empty()) return a;
  UniPoly inv_lead = elem_inv(br, a.back());
  for (auto& c : a) c = elem_mul(br, c, inv_lead);
  return a;
}

EPoly epoly_gcd(Branch& br, EPoly a, EPoly b) {
  epoly_trim(br, a);
  epoly_trim(br, b);
  while (!b.empty()) {
    EPoly r = epoly_rem(br, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return epoly_monic(br, a);
}

EPoly epoly_derivative(Branch& br, const EPoly& a) {
  EPoly d;
  for (size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Scalar(static_cast<long>(i)));
  epoly_trim(br, d);
  return d;
}

EPoly epoly_squarefree(Branch& br, const EPoly& a) {
  EPoly d = epoly_derivative(br, a);
  if (d.empty()) return epoly_monic(br, a);
  EPoly g = epoly_gcd(br, a, d);
  if (epoly_deg(g) < 1) return epoly_monic(br, a);
  // exact division a / g
  EPoly q;
  EPoly r = a;
  epoly_trim(br, r);
  UniPoly inv_lead = elem_inv(br, g.back());
  q.assign(r.size() - g.size() + 1, UniPoly());
  while (epoly_deg(r) >= epoly_deg(g)) {
    UniPoly c = elem_mul(br, r.back(), inv_lead);
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      r[shift + i] -= elem_mul(br, c, g[i]);
    r.pop_back();
    epoly_trim(br, r);
  }
  if (!r.empty()) throw std::logic_error("squarefree division left a remainder");
  return epoly_monic(br, q);
}

// The constraint polynomial for v on this branch: gcd of all basis elements
// that involve only v and already-assigned variables.  Returns false when the
// branch is inconsistent (some assigned-only element is nonzero).
bool constraint_for(Branch& br, const std::vector<MultiPoly>& gb, Var v, EPoly& m_out) {
  std::vector<EPoly> cands;
  for (const auto& p : gb) {
    bool ok = true, uses_v = false;
    for (const auto& t : p.terms()) {
      for (int w = 0; w < kNumVars; ++w) {
        if (!t.m[w]) continue;
        if (w == static_cast<int>(v)) {
          uses_v = true;
        } else if (!br.vals.count(static_cast<Var>(w))) {
          ok = false;
        }
      }
    }
    if (!ok) continue;
    if (!uses_v) {
      // consistency constraint on the assigned prefix
      if (!elem_is_zero(br, eval_assigned(br, p))) return false;
      continue;
    }
    auto coeffs = p.collect(v);
    EPoly e;
    for (int i = 0; i <= coeffs.deg(); ++i) e.push_back(eval_assigned(br, coeffs.coeff(i)));
    epoly_trim(br, e);
    if (!e.empty()) cands.push_back(std::move(e));
  }
  if (cands.empty()) throw std::logic_error("free variable in zero-dimensional solve");
  EPoly m = cands[0];
  for (size_t i = 1; i < cands.size(); ++i) m = epoly_gcd(br, m, cands[i]);
  m_out = std::move(m);
  return true;
}

// Enumerate the candidate values of v on this branch, appending one branch
// per root.
void assign_var(Branch br, const std::vector<MultiPoly>& gb, Var v, std::vector<Branch>& out) {
  EPoly m;
  if (!constraint_for(br, gb, v, m)) return;  // inconsistent prefix
  epoly_trim(br, m);
  if (m.empty()) throw std::logic_error("free variable in zero-dimensional solve");
  if (epoly_deg(m) == 0) return;  // no common root: branch dies
  if (epoly_deg(m) == 1) {
    UniPoly value = elem_mul(br, UniPoly() - m[0], elem_inv(br, m[1]));
    br.vals[v] = value;
    out.push_back(std::move(br));
    return;
  }
  if (br.has_ext) throw need_rur{};
  // Base field: every coefficient is a constant polynomial.
  std::vector<Scalar> cs;
  for (const auto& c : m) cs.push_back(c.deg() >= 0 ? c.coeff(0) : Scalar(0));
  UniPoly q = squarefree_part(UniPoly(std::move(cs)));
  RootIsolation iso = sturm_isolate(q);
  for (const auto& ivl : iso.intervals) {
    Branch child = br;
    child.has_ext = true;
    child.g = monic(iso.squarefree);
    child.iv = ivl;
    child.vals[v] = UniPoly::var();
    out.push_back(std::move(child));
  }
}

std::vector<Branch> run_branches(const std::vector<MultiPoly>& gb, const std::vector<Var>& order) {
  std::vector<Branch> branches{Branch{}};
  for (Var v : order) {
    std::vector<Branch> next;
    for (auto& br : branches) assign_var(std::move(br), gb, v, next);
    branches = std::move(next);
    if (branches.empty()) break;
  }
  return branches;
}

// Exact final filter: keep only branches whose point kills every generator.
void verify_branches(std::vector<Branch>& branches, const std::vector<MultiPoly>& gens) {
  std::vector<Branch> kept;
  for (auto& br : branches) {
    bool ok = true;
    for (const auto& p : gens) {
      if (!elem_is_zero(br, eval_assigned(br, p))) {
        ok = false;
        break;
      }
    }
    if (ok) kept.push_back(std::move(br));
  }
  branches = std::move(kept);
}

SolveValue coord_value(const Branch& br, const UniPoly& h, long ambient_d) {
  UniPoly hr = br.has_ext ? rem(h, br.g) : h;
  if (hr.deg() <= 0) return SolveValue(hr.deg() < 0 ? Scalar(0) : hr.coeff(0));
  QIv theta_iv = br.iv;
  AlgNum a = algnum_of_value(hr, br.g, SturmChain(br.g), theta_iv);
  Scalar s;
  if (a.to_scalar(s, ambient_d)) return SolveValue(s);
  return SolveValue(a);
}

std::vector<SolutionPoint> reconstruct(const std::vector<Branch>& branches,
                                       const std::vector<Var>& ring_vars, long ambient_d) {
  std::vector<SolutionPoint> points;
  for (const auto& br : branches) {
    SolutionPoint pt;
    for (Var v : ring_vars) pt.coords.emplace(v, coord_value(br, br.vals.at(v), ambient_d));
    bool dup = false;
    for (const auto& q : points) {
      bool same = true;
      for (Var v : ring_vars)
        if (!solve_values_equal(q.at(v), pt.at(v))) {
          same = false;
          break;
        }
      if (same) {
        dup = true;
        break;
      }
    }
    if (!dup) points.push_back(std::move(pt));
  }
  return points;
}

}  // namespace

std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb,
                                          const std::vector<Var>& ring_vars, long ambient_d,
                                          BudgetCounter& budget) {
  int dim = ideal_dimension(gb, ring_vars);
  if (dim == -1) return {};
  if (dim > 0) throw dimension_error(dim);
  // Solve lowest-ranked variable first (lex basis is triangular from below).
  std::vector<Var> order = ring_vars;
  std::sort(order.begin(), order.end(),
            [](Var a, Var b) { return static_cast<int>(a) > static_cast<int>(b); });

  std::vector<Branch> branches;
  try {
    branches = run_branches(gb, order);
    verify_branches(branches, gb);
    return reconstruct(branches, ring_vars, ambient_d);
  } catch (const need_rur&) {
    // fall through to the univariate reduction below
  }

  // Nonlinear step over an extension: re-express everything through one
  // separating coordinate w replacing the lowest-ranked variable, so that
  // back-substitution only meets linear steps afterwards.
  Var w = order.front();
  std::vector<Var> others(order.begin() + 1, order.end());
  for (long k = 1; k <= 5; ++k) {
    MultiPoly shift = MultiPoly::variable(w);
    long c = 1;
    for (Var x : others) {
      c *= k;
      shift = shift - MultiPoly::variable(x) * Scalar(c);
    }
    std::vector<MultiPoly> gens;
    for (const auto& p : gb) gens.push_back(p.substitute(w, shift));
    std::vector<MultiPoly> gb2 = buchberger(gens, budget);
    try {
      branches = run_branches(gb2, order);
    } catch (const need_rur&) {
      continue;  // w not separating (or ideal shape still bad): next candidate
    }
    // Undo the coordinate change: old w-value = new w-value - sum c_i x_i.
    for (auto& br : branches) {
      UniPoly corrected = br.vals.at(w);
      long cc = 1;
      for (Var x : others) {
        cc *= k;
        corrected -= br.vals.at(x) * Scalar(cc);
      }
      br.vals[w] = elem_reduce(br, corrected);
    }
    verify_branches(branches, gb);
    return reconstruct(branches, ring_vars, ambient_d);
  }
  throw budget_exceeded(
      "solver could not reduce the system to one extension; "
      "raise RULED_EQUIV_BUDGET or simplify the input");
}

std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb,
                                          const std::vector<Var>& ring_vars, long ambient_d) {
  BudgetCounter budget(default_budget());
  return solve_zero_dim(gb, ring_vars, ambient_d, budget);
}

std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb) {
  long d = 0;
  for (const auto& p : gb)
    for (const auto& t : p.terms())
      if (t.c.field_d()) d = t.c.field_d();
  return solve_zero_dim(gb, vars_of(gb), d);
}

}  // namespace ruled
