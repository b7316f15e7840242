#include "ruled/equiv.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "ruled/special.hpp"

namespace ruled {

Var a_var(int i, int j) {
  if (i < 0 || i > 2 || j < 0 || j > 2)
    throw std::out_of_range("matrix entry index");
  return static_cast<Var>(static_cast<int>(Var::A11) + 3 * i + j);
}

namespace {

MultiPoly mp(Var v) { return MultiPoly::variable(v); }

PPoly lift(const UniPoly& p) {
  std::vector<MultiPoly> c;
  c.reserve(p.deg() + 1);
  for (int i = 0; i <= p.deg(); ++i) c.emplace_back(p.coeff(i));
  return PPoly(std::move(c));
}

PPoly ppow(const PPoly& base, int e) {
  PPoly acc{MultiPoly(1)};
  for (int i = 0; i < e; ++i) acc = acc * base;
  return acc;
}

MultiPoly ppoly_at(const PPoly& p, const Scalar& tau) {
  return p.eval(MultiPoly(tau));
}

MultiPoly det3(const std::array<std::array<MultiPoly, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

UniPoly poly_lcm(const UniPoly& a, const UniPoly& b) {
  return monic(exact_div(a * b, gcd(a, b)));
}

// Clear-denominator form of the base-curve part of the functional equation.
// With D the common denominator of p1, P1_j = D p1_j, and Num2_i/Den2_i the
// numerator and denominator of p2_i composed with psi and cleared by
// (gamma t + delta)^(m_i), component i of
//   A p1 + b - p2(psi) - c q2(psi)
// times D Den2_i equals G_i + b_i H_i - c H_i Q_i (gamma t + delta)^(-n),
// where G_i = (A P1)_i Den2_i - D Num2_i and H_i = D Den2_i.
struct BaseParts {
  std::array<PPoly, 3> G, H, Den2, Q;
};

BaseParts base_parts(const RuledSurface& s1, const RuledSurface& s2,
                     const ReducedL& red) {
  UniPoly D{Scalar(1)};
  for (int j = 0; j < 3; ++j) D = poly_lcm(D, s1.p[j].den());
  PPoly Dl = lift(D);
  std::array<PPoly, 3> AP;
  for (int i = 0; i < 3; ++i) {
    AP[i] = PPoly();
    for (int j = 0; j < 3; ++j) {
      UniPoly P1j = s1.p[j].num() * exact_div(D, s1.p[j].den());
      AP[i] += PPoly(red.A[i][j]) * lift(P1j);
    }
  }
  BaseParts bp;
  for (int i = 0; i < 3; ++i) {
    const RatFunc& p2i = s2.p[i];
    int m = std::max({p2i.num().deg(), p2i.den().deg(), 0});
    PPoly Num2{mobius_numerator_sym(p2i.num(), m)};
    bp.Den2[i] = PPoly(mobius_numerator_sym(p2i.den(), m));
    bp.Q[i] = PPoly(mobius_numerator_sym(s2.q[i], s2.n));
    bp.G[i] = AP[i] * bp.Den2[i] - Dl * Num2;
    bp.H[i] = Dl * bp.Den2[i];
  }
  return bp;
}

constexpr int kPairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};

struct SampleRow {
  std::array<MultiPoly, 3> c;
  MultiPoly rhs;
};

// Rescales the polynomials by one common positive factor so that the
// integer coefficients become jointly primitive.  Ratios between the
// polynomials are preserved, only the coefficient size shrinks.
void joint_primitive(std::initializer_list<MultiPoly*> ps) {
  mpz_class den_lcm(1), num_gcd(0);
  auto absorb = [&](const mpq_class& q) {
    if (q == 0) return;
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num().get_mpz_t());
  };
  for (const MultiPoly* p : ps)
    for (const auto& t : p->terms()) {
      absorb(t.c.rat_part());
      absorb(t.c.quad_part());
    }
  if (num_gcd == 0) return;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (scale == 1) return;
  for (MultiPoly* p : ps) *p = p->mul_scalar(Scalar(scale));
}

bool row_zero(const SampleRow& r) {
  return r.c[0].is_zero() && r.c[1].is_zero() && r.c[2].is_zero();
}

// Greedy rank test: the candidate extends the chosen rows to a larger
// nonsingular system (as polynomials in the parameters).
bool extends_rank(const std::vector<SampleRow>& sel, const SampleRow& cand) {
  if (row_zero(cand)) return false;
  if (sel.empty()) return true;
  if (sel.size() == 1) {
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (!(sel[0].c[a] * cand.c[b] - sel[0].c[b] * cand.c[a]).is_zero())
          return true;
    return false;
  }
  std::array<std::array<MultiPoly, 3>, 3> m{sel[0].c, sel[1].c, cand.c};
  return !det3(m).is_zero();
}

std::vector<Scalar> sample_taus() {
  return {Scalar(0), Scalar(1), Scalar(-1), Scalar(2), Scalar(-2),
          Scalar(3), Scalar(-3), Scalar(4), Scalar(-4), Scalar(5)};
}

MultiPoly mobius_det_saturation() {
  return mp(Var::alpha) * mp(Var::delta) * mp(Var::u) -
         mp(Var::beta) * mp(Var::gamma) * mp(Var::u) - MultiPoly(1);
}

MultiPoly scale_saturation() { return mp(Var::k) * mp(Var::u2) - MultiPoly(1); }

}  // namespace

LinearSystemL assemble_L(const RuledSurface& s1, const RuledSurface& s2) {
  if (!s1.normalized || !s2.normalized)
    throw std::invalid_argument("ruling system needs standardized surfaces");
  if (s1.n != s2.n)
    throw std::invalid_argument("ruling system needs equal direction degrees");
  const int n = s1.n;
  LinearSystemL L;
  L.n = n;
  MultiPoly kv = mp(Var::k);
  for (int i = 0; i < 3; ++i) {
    std::vector<MultiPoly> sym = mobius_numerator_sym(s2.q[i], n);
    for (int l = 0; l <= n; ++l) {
      std::vector<Scalar> row(9, Scalar(0));
      for (int j = 0; j < 3; ++j) row[3 * i + j] = s1.q[j].coeff(l);
      L.A.push_back(std::move(row));
      L.rhs.push_back(kv * sym[l]);
    }
  }
  return L;
}

ReducedL reduce_L(const LinearSystemL& L, int r) {
  if (r < 2 || r > 3)
    throw std::invalid_argument("reduction expects direction rank 2 or 3");
  const int rows = L.n + 1;
  // One shared coefficient block V acts on each row of A; carry the three
  // blocks' right-hand sides through a single Gauss-Jordan pass.
  std::vector<std::vector<Scalar>> V(rows, std::vector<Scalar>(3, Scalar(0)));
  std::array<std::vector<MultiPoly>, 3> rhs;
  for (int l = 0; l < rows; ++l)
    for (int j = 0; j < 3; ++j) V[l][j] = L.A[l][j];
  for (int b = 0; b < 3; ++b) {
    rhs[b].resize(rows);
    for (int l = 0; l < rows; ++l) rhs[b][l] = L.rhs[b * rows + l];
  }
  std::vector<int> pivots;
  int rr = 0;
  for (int col = 0; col < 3 && rr < rows; ++col) {
    int sel = -1;
    for (int i = rr; i < rows; ++i)
      if (!V[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(V[rr], V[sel]);
    for (int b = 0; b < 3; ++b) std::swap(rhs[b][rr], rhs[b][sel]);
    Scalar inv = V[rr][col].inv();
    for (int j = 0; j < 3; ++j) V[rr][j] = V[rr][j] * inv;
    for (int b = 0; b < 3; ++b) rhs[b][rr] = rhs[b][rr].mul_scalar(inv);
    for (int i = 0; i < rows; ++i) {
      if (i == rr || V[i][col].is_zero()) continue;
      Scalar f = V[i][col];
      for (int j = 0; j < 3; ++j) V[i][j] = V[i][j] - f * V[rr][j];
      for (int b = 0; b < 3; ++b)
        rhs[b][i] = rhs[b][i] - rhs[b][rr].mul_scalar(f);
    }
    pivots.push_back(col);
    ++rr;
  }
  if (rr != r)
    throw std::logic_error("direction coefficient rank disagrees with the profile");

  ReducedL out;
  out.r = r;
  std::vector<int> free_cols;
  for (int col = 0; col < 3; ++col)
    if (std::find(pivots.begin(), pivots.end(), col) == pivots.end())
      free_cols.push_back(col);
  for (int b = 0; b < 3; ++b) {
    for (int fc : free_cols) {
      out.A[b][fc] = mp(a_var(b, fc));
      out.free_entries.push_back(a_var(b, fc));
    }
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      MultiPoly e = rhs[b][pi];
      for (int fc : free_cols)
        e -= mp(a_var(b, fc)).mul_scalar(V[pi][fc]);
      out.A[b][pivots[pi]] = e;
    }
    for (int l = r; l < rows; ++l) {
      // 0 = rhs on a zeroed row; k divides every term by construction.
      MultiPoly cond = rhs[b][l];
      out.conditions.push_back(
          cond.is_zero() ? cond : cond.div_var(Var::k).primitive_scaled());
    }
  }
  return out;
}

// Eliminating c between components i and j of the base equation gives
//   (G_i + b_i H_i) Den2_j Q_j = (G_j + b_j H_j) Den2_i Q_i,
// linear in b.  Sampling at fixed t-values yields rows whose coefficients are
// polynomials in the reparametrization parameters.
std::vector<SampleRow> translation_rows(const BaseParts& bp) {
  std::array<PPoly, 3> CI, CJ, R0;
  for (int p = 0; p < 3; ++p) {
    int i = kPairs[p][0], j = kPairs[p][1];
    PPoly X = bp.Den2[j] * bp.Q[j], Y = bp.Den2[i] * bp.Q[i];
    CI[p] = bp.H[i] * X;
    CJ[p] = bp.H[j] * Y;
    R0[p] = bp.G[i] * X - bp.G[j] * Y;
  }
  std::vector<SampleRow> rows;
  for (const Scalar& tau : sample_taus()) {
    for (int p = 0; p < 3; ++p) {
      int i = kPairs[p][0], j = kPairs[p][1];
      SampleRow row;
      row.c[i] = ppoly_at(CI[p], tau);
      row.c[j] = -ppoly_at(CJ[p], tau);
      row.rhs = -ppoly_at(R0[p], tau);
      joint_primitive({&row.c[0], &row.c[1], &row.c[2], &row.rhs});
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// Keeps the first three rows, outside the skip set, that are independent as
// polynomials in the parameters.  Early rows sample at small t-values and
// carry the smallest coefficients, so the scan order doubles as a cost
// heuristic.
std::optional<std::array<int, 3>> greedy_triple(
    const std::vector<SampleRow>& rows, const std::set<int>& skip) {
  std::vector<SampleRow> sel;
  std::array<int, 3> idx{};
  for (size_t i = 0; i < rows.size() && sel.size() < 3; ++i) {
    if (skip.count(static_cast<int>(i))) continue;
    if (extends_rank(sel, rows[i])) {
      idx[sel.size()] = static_cast<int>(i);
      sel.push_back(rows[i]);
    }
  }
  if (sel.size() < 3) return std::nullopt;
  return idx;
}

struct CramerData {
  std::array<MultiPoly, 3> num;
  MultiPoly den;
};

CramerData cramer(const std::vector<SampleRow>& rows,
                  const std::array<int, 3>& t) {
  std::array<std::array<MultiPoly, 3>, 3> M{rows[t[0]].c, rows[t[1]].c,
                                            rows[t[2]].c};
  CramerData cd;
  cd.den = det3(M);
  for (int col = 0; col < 3; ++col) {
    auto Mc = M;
    for (int row = 0; row < 3; ++row) Mc[row][col] = rows[t[row]].rhs;
    cd.num[col] = det3(Mc);
  }
  joint_primitive({&cd.num[0], &cd.num[1], &cd.num[2], &cd.den});
  return cd;
}

TranslationExpr recover_translation(const RuledSurface& s1,
                                    const RuledSurface& s2,
                                    const ReducedL& red) {
  BaseParts bp = base_parts(s1, s2, red);
  std::vector<SampleRow> rows = translation_rows(bp);
  auto triple = greedy_triple(rows, {});
  if (!triple) throw std::logic_error("translation system is rank deficient");
  CramerData cd = cramer(rows, *triple);
  TranslationExpr tr;
  tr.b_den = cd.den;
  tr.b_num = cd.num;
  int m = 0;
  while (m < 3 && s2.q[m].is_zero()) ++m;
  if (m == 3) throw std::logic_error("zero direction survived standardization");
  PPoly delta_t{std::vector<MultiPoly>{mp(Var::delta), mp(Var::gamma)}};
  PPoly bden{tr.b_den};
  tr.c_num =
      ppow(delta_t, s1.n) * (bp.G[m] * bden + PPoly(tr.b_num[m]) * bp.H[m]);
  tr.c_den = bp.H[m] * bp.Q[m] * bden;
  return tr;
}

std::vector<MultiPoly> assemble_S(const RuledSurface& s1,
                                  const RuledSurface& s2, const ReducedL& red,
                                  const TranslationExpr& tr) {
  BaseParts bp = base_parts(s1, s2, red);
  std::vector<MultiPoly> S;
  std::set<std::string> seen;
  auto add = [&](const MultiPoly& f) {
    if (f.is_zero()) return;
    MultiPoly g = f.primitive_scaled();
    if (seen.insert(g.str()).second) S.push_back(std::move(g));
  };
  PPoly bden{tr.b_den};
  std::array<PPoly, 3> N;
  for (int i = 0; i < 3; ++i)
    N[i] = bp.G[i] * bden + PPoly(tr.b_num[i]) * bp.H[i];
  for (int p = 0; p < 3; ++p) {
    int i = kPairs[p][0], j = kPairs[p][1];
    PPoly R = N[i] * (bp.Den2[j] * bp.Q[j]) - N[j] * (bp.Den2[i] * bp.Q[i]);
    for (const MultiPoly& cf : R.coeffs()) add(cf);
  }
  // The residuals above clear b through one fixed row triple, so they all
  // vanish identically wherever that triple degenerates together with its
  // right-hand side.  Disjoint alternative triples close the gap: a row rho
  // is consistent with triple T exactly when
  //   sum_c rho.c[c] num_T[c] - rho.rhs den_T = 0,
  // the bordered determinant of the augmented system.
  std::vector<SampleRow> rows = translation_rows(bp);
  std::set<int> skip;
  if (auto t0 = greedy_triple(rows, {}))
    for (int i : *t0) skip.insert(i);
  for (int extra = 0; extra < 2; ++extra) {
    auto t = greedy_triple(rows, skip);
    if (!t) break;
    for (int i : *t) skip.insert(i);
    CramerData cd = cramer(rows, *t);
    size_t lim = std::min<size_t>(rows.size(), 12);
    for (size_t rho = 0; rho < lim; ++rho) {
      if (static_cast<int>(rho) == (*t)[0] ||
          static_cast<int>(rho) == (*t)[1] || static_cast<int>(rho) == (*t)[2])
        continue;
      MultiPoly border = rows[rho].rhs * cd.den;
      for (int c = 0; c < 3; ++c) border -= rows[rho].c[c] * cd.num[c];
      add(border);
    }
  }
  for (const MultiPoly& c : red.conditions) add(c);
  add(mobius_det_saturation());
  add(scale_saturation());
  return S;
}

std::vector<MultiPoly> orthogonality_conditions(const ReducedL& red,
                                                bool use_lambda) {
  std::vector<MultiPoly> out;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      MultiPoly e;
      for (int i = 0; i < 3; ++i) e += red.A[i][a] * red.A[i][b];
      if (a == b) e -= use_lambda ? mp(Var::lam) : MultiPoly(1);
      out.push_back(std::move(e));
    }
  return out;
}

bool verify(const AffineMap& f, const Reparam& phi, const RuledSurface& s1,
            const RuledSurface& s2) {
  if (s1.n != s2.n || phi.n != s1.n) return false;
  if (phi.k.is_zero() || phi.psi.det().is_zero()) return false;
  if (det(f.A).is_zero()) return false;
  const int n = s1.n;
  for (int i = 0; i < 3; ++i) {
    UniPoly lhs;
    for (int j = 0; j < 3; ++j) lhs += s1.q[j] * f.A[i][j];
    UniPoly rhs = mobius_numerator(s2.q[i], phi.psi, n) * phi.k;
    if (!(lhs == rhs)) return false;
  }
  RatFunc one_den{UniPoly(Scalar(1)), UniPoly(Scalar(1))};
  for (int i = 0; i < 3; ++i) {
    RatFunc lhs{Scalar(0)};
    for (int j = 0; j < 3; ++j) lhs = lhs + RatFunc(f.A[i][j]) * s1.p[j];
    lhs = lhs + RatFunc(f.b[i]);
    RatFunc q2psi =
        compose_mobius(RatFunc(s2.q[i], UniPoly(Scalar(1))), phi.psi);
    RatFunc rhs = compose_mobius(s2.p[i], phi.psi) + phi.c * q2psi;
    if (!(lhs == rhs)) return false;
  }
  return true;
}

std::optional<std::pair<Vec3, RatFunc>> recover_translation_concrete(
    const RuledSurface& s1, const RuledSurface& s2, const Mat3& A,
    const MobiusMap& psi, const Scalar& k) {
  (void)k;
  std::array<RatFunc, 3> w, g;
  for (int i = 0; i < 3; ++i) {
    RatFunc acc{Scalar(0)};
    for (int j = 0; j < 3; ++j) acc = acc + RatFunc(A[i][j]) * s1.p[j];
    w[i] = acc - compose_mobius(s2.p[i], psi);
    g[i] = compose_mobius(RatFunc(s2.q[i], UniPoly(Scalar(1))), psi);
  }
  // b_i g_j - b_j g_i = w_j g_i - w_i g_j per t-coefficient.
  std::vector<std::vector<Scalar>> M;
  std::vector<Scalar> rhs;
  for (int p = 0; p < 3; ++p) {
    int i = kPairs[p][0], j = kPairs[p][1];
    RatFunc r0 = w[j] * g[i] - w[i] * g[j];
    UniPoly D = g[i].den() * g[j].den() * r0.den();
    UniPoly Pi = g[j].num() * exact_div(D, g[j].den());
    UniPoly Pj = g[i].num() * exact_div(D, g[i].den());
    UniPoly P0 = r0.num() * exact_div(D, r0.den());
    int top = std::max({Pi.deg(), Pj.deg(), P0.deg()});
    for (int l = 0; l <= top; ++l) {
      std::vector<Scalar> row(3, Scalar(0));
      row[i] = Pi.coeff(l);
      row[j] = -Pj.coeff(l);
      M.push_back(std::move(row));
      rhs.push_back(P0.coeff(l));
    }
  }
  LinearSolution sol = solve_linear(M, rhs);
  if (!sol.consistent) return std::nullopt;
  Vec3 b = vec3(sol.particular[0], sol.particular[1], sol.particular[2]);
  int m = 0;
  while (m < 3 && g[m].is_zero()) ++m;
  if (m == 3) return std::nullopt;
  RatFunc c = (w[m] + RatFunc(b[m])) / g[m];
  for (int i = 0; i < 3; ++i)
    if (!((w[i] + RatFunc(b[i])) == c * g[i])) return std::nullopt;
  return std::make_pair(b, c);
}

std::optional<ScalarEquiv> candidate_from_point(
    const RuledSurface& s1, const RuledSurface& s2, const ReducedL& red,
    const SolutionPoint& pt, const std::vector<std::pair<Var, Scalar>>& fixed,
    const PipelineOptions& opt) {
  if (!pt.all_scalar()) return std::nullopt;
  std::array<Scalar, kNumVars> vals;
  vals.fill(Scalar(0));
  for (const auto& [v, sv] : pt.coords)
    vals[static_cast<int>(v)] = solve_value_scalar(sv);
  for (const auto& [v, s] : fixed) vals[static_cast<int>(v)] = s;
  MobiusMap psi{vals[static_cast<int>(Var::alpha)],
                vals[static_cast<int>(Var::beta)],
                vals[static_cast<int>(Var::gamma)],
                vals[static_cast<int>(Var::delta)]};
  Scalar k = vals[static_cast<int>(Var::k)];
  if (psi.det().is_zero() || k.is_zero()) return std::nullopt;
  Mat3 A;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) A[i][j] = red.A[i][j].eval(vals);
  if (det(A).is_zero()) return std::nullopt;
  if (opt.orthogonal) {
    Scalar scale =
        opt.use_lambda ? vals[static_cast<int>(Var::lam)] : Scalar(1);
    if (scale.sign() <= 0) return std::nullopt;
    if (!(transpose(A) * A == scale * mat3_identity())) return std::nullopt;
  }
  auto bc = recover_translation_concrete(s1, s2, A, psi, k);
  if (!bc) return std::nullopt;
  ScalarEquiv se{AffineMap{A, bc->first}, Reparam{psi, k, bc->second, s1.n}};
  if (!verify(se.f, se.phi, s1, s2)) return std::nullopt;
  return se;
}

namespace {

struct CaseSub {
  std::vector<std::pair<Var, Scalar>> fixed;
};

MultiPoly case_substitute(MultiPoly f, const CaseSub& cs) {
  for (const auto& [v, s] : cs.fixed) f = f.substitute(v, s);
  return f;
}

// false when the substituted polynomial is a nonzero constant (the case is
// then inconsistent as a whole)
bool push_case(std::vector<MultiPoly>& dst, const MultiPoly& f,
               const CaseSub& cs) {
  MultiPoly g = case_substitute(f, cs);
  if (g.is_zero()) return true;
  if (g.is_constant()) return false;
  dst.push_back(g.primitive_scaled());
  return true;
}

bool trivial_basis(const std::vector<MultiPoly>& gb) {
  for (const auto& f : gb)
    if (!f.is_zero() && f.is_constant()) return true;
  return false;
}

std::vector<Var> case_param_vars(const CaseSub& cs, const PipelineOptions& opt,
                                 const ReducedL& red) {
  std::set<int> fixed;
  for (const auto& [v, s] : cs.fixed) fixed.insert(static_cast<int>(v));
  std::vector<Var> out{Var::u, Var::u2};
  for (Var f : red.free_entries) out.push_back(f);
  if (opt.use_lambda) out.push_back(Var::lam);
  out.push_back(Var::k);
  for (Var v : {Var::alpha, Var::beta, Var::gamma, Var::delta})
    if (!fixed.count(static_cast<int>(v))) out.push_back(v);
  std::sort(out.begin(), out.end(), [](Var a, Var b) {
    return static_cast<int>(a) < static_cast<int>(b);
  });
  return out;
}

std::vector<Var> support_of(const MultiPoly& f) {
  std::array<bool, kNumVars> seen{};
  for (const auto& t : f.terms())
    for (int v = 0; v < kNumVars; ++v)
      if (t.m[v]) seen[v] = true;
  std::vector<Var> out;
  for (int v = 0; v < kNumVars; ++v)
    if (seen[v]) out.push_back(static_cast<Var>(v));
  return out;
}

bool support_inside(const std::vector<Var>& sup, const std::set<Var>& T) {
  for (Var v : sup)
    if (!T.count(v)) return false;
  return true;
}

bool covers_all(const SolutionPoint& pt, const std::vector<Var>& vars) {
  for (Var v : vars)
    if (!pt.coords.count(v)) return false;
  return true;
}

struct CascadeBranch {
  SolutionPoint pt;
  std::vector<MultiPoly> gens;
};

// Enumerates the solutions of a system that falls apart into a chain of small
// variable blocks (reparametrization first, then the scale, then leftover
// matrix entries). Each block is solved on its own and its points are
// substituted into the rest. Returns nullopt when the system does not split
// this way, a block stays positive-dimensional, or a coordinate leaves the
// ambient field mid-chain; the caller then falls back to the joint basis.
std::optional<std::vector<SolutionPoint>> cascade_solve(
    const std::vector<MultiPoly>& gens0, const std::vector<Var>& vars,
    long ambient_d, BudgetCounter& budget) {
  std::vector<SolutionPoint> done;
  std::vector<CascadeBranch> work;
  work.push_back(CascadeBranch{SolutionPoint{}, gens0});
  while (!work.empty()) {
    CascadeBranch br = std::move(work.back());
    work.pop_back();
    std::vector<MultiPoly> live;
    std::vector<std::vector<Var>> sup;
    bool dead = false;
    for (const auto& g : br.gens) {
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        dead = true;
        break;
      }
      live.push_back(g.primitive_scaled());
      sup.push_back(support_of(live.back()));
    }
    if (dead) continue;
    if (live.empty()) {
      if (!covers_all(br.pt, vars)) return std::nullopt;
      done.push_back(std::move(br.pt));
      continue;
    }

    size_t seed = 0;
    for (size_t i = 1; i < live.size(); ++i)
      if (sup[i].size() < sup[seed].size()) seed = i;
    std::set<Var> T(sup[seed].begin(), sup[seed].end());
    for (;;) {
      std::vector<size_t> sub_idx;
      for (size_t i = 0; i < live.size(); ++i)
        if (support_inside(sup[i], T)) sub_idx.push_back(i);
      if (sub_idx.size() == live.size() && br.pt.coords.empty())
        return std::nullopt;  // no split available: this is the joint system
      std::vector<MultiPoly> sub;
      for (size_t i : sub_idx) sub.push_back(live[i]);
      auto gb = buchberger(sub, budget);
      if (trivial_basis(gb)) break;  // branch inconsistent
      std::vector<Var> tv(T.begin(), T.end());
      if (ideal_dimension(gb, tv) != 0) {
        if (sub_idx.size() == live.size()) return std::nullopt;
        // grow the block by the generator adding the fewest new variables
        size_t grow = live.size();
        size_t best_extra = SIZE_MAX;
        for (size_t i = 0; i < live.size(); ++i) {
          if (support_inside(sup[i], T)) continue;
          size_t extra = 0;
          for (Var v : sup[i])
            if (!T.count(v)) ++extra;
          if (extra < best_extra) {
            best_extra = extra;
            grow = i;
          }
        }
        for (Var v : sup[grow]) T.insert(v);
        continue;
      }
      std::vector<MultiPoly> rest;
      for (size_t i = 0, j = 0; i < live.size(); ++i) {
        if (j < sub_idx.size() && sub_idx[j] == i) {
          ++j;
          continue;
        }
        rest.push_back(live[i]);
      }
      for (const auto& bpt : solve_zero_dim(gb, tv, ambient_d, budget)) {
        SolutionPoint pt = br.pt;
        for (const auto& [v, sv] : bpt.coords) pt.coords.emplace(v, sv);
        if (!bpt.all_scalar()) {
          if (!rest.empty()) return std::nullopt;
          if (!covers_all(pt, vars)) return std::nullopt;
          done.push_back(std::move(pt));
          continue;
        }
        CascadeBranch child;
        child.pt = std::move(pt);
        child.gens = rest;
        for (auto& g : child.gens)
          for (const auto& [v, sv] : bpt.coords)
            g = g.substitute(v, solve_value_scalar(sv));
        work.push_back(std::move(child));
      }
      break;
    }
  }
  return done;
}

bool same_equiv(const ScalarEquiv& a, const ScalarEquiv& b) {
  return a.f.A == b.f.A && a.f.b == b.f.b && same_reparam(a.phi, b.phi);
}

void push_member(std::vector<ScalarEquiv>& members, const ScalarEquiv& se) {
  for (const auto& m : members)
    if (same_equiv(m, se)) return;
  members.push_back(se);
}

std::vector<Scalar> family_pool() {
  return {Scalar(1),  Scalar(-1), Scalar(2), Scalar(-2), Scalar(1, 2),
          Scalar(3),  Scalar(-3), Scalar(0), Scalar(5),  Scalar(-5)};
}

// Pins the free parameters of a positive-dimensional component to values from
// the pool and keeps the verified specializations as witness members.
void sample_family(const RuledSurface& s1, const RuledSurface& s2,
                   const ReducedL& red, const CaseSub& cs,
                   const PipelineOptions& opt, const std::vector<Var>& pvars,
                   long ambient_d, BudgetCounter& budget,
                   InfiniteComponent& comp) {
  if (comp.free_vars.empty()) return;
  std::vector<Scalar> pool = family_pool();
  std::vector<Var> pv2;
  for (Var v : pvars)
    if (std::find(comp.free_vars.begin(), comp.free_vars.end(), v) ==
        comp.free_vars.end())
      pv2.push_back(v);
  for (size_t attempt = 0; attempt < pool.size() && comp.samples.size() < 2;
       ++attempt) {
    CaseSub cs2 = cs;
    for (size_t i = 0; i < comp.free_vars.size(); ++i)
      cs2.fixed.emplace_back(comp.free_vars[i],
                             pool[(attempt + 3 * i) % pool.size()]);
    std::vector<MultiPoly> polys;
    bool ok = true;
    for (const auto& f : comp.gb) {
      MultiPoly g = f;
      for (size_t i = cs.fixed.size(); i < cs2.fixed.size(); ++i)
        g = g.substitute(cs2.fixed[i].first, cs2.fixed[i].second);
      if (g.is_zero()) continue;
      if (g.is_constant()) {
        ok = false;
        break;
      }
      polys.push_back(g.primitive_scaled());
    }
    if (!ok) continue;
    try {
      auto gb2 = buchberger(polys, budget);
      if (trivial_basis(gb2)) continue;
      if (ideal_dimension(gb2, pv2) != 0) continue;
      for (const auto& pt : solve_zero_dim(gb2, pv2, ambient_d, budget)) {
        auto se = candidate_from_point(s1, s2, red, pt, cs2.fixed, opt);
        if (se) push_member(comp.samples, *se);
        if (comp.samples.size() >= 2) break;
      }
    } catch (const dimension_error&) {
      continue;
    }
  }
}

}  // namespace

EquivalenceSet run_equivalence_pipeline(const RuledSurface& s1in,
                                        const RuledSurface& s2in,
                                        const PipelineOptions& opt) {
  RuledSurface s1 = s1in.normalized ? s1in : normalize(s1in);
  RuledSurface s2 = s2in.normalized ? s2in : normalize(s2in);
  EquivalenceSet out;
  if (s1.n != s2.n) {
    out.note = "ruling degrees differ";
    return out;
  }
  long ambient_d = common_field_d(s1, s2);
  SurfaceClass c1 = classify(s1), c2 = classify(s2);
  using CT = SurfaceClass::Tag;
  bool cyl1 = c1.tag == CT::Cylindrical, cyl2 = c2.tag == CT::Cylindrical;
  if (cyl1 != cyl2) {
    out.note = "only one side is cylindrical";
    return out;
  }
  if (cyl1) {
    out.tag = EquivalenceSet::Tag::NotSupported;
    out.reduction = cylindrical_reduce(s1);
    out.note =
        "cylindrical pair reduces to comparing planar sections, which this "
        "engine does not solve";
    return out;
  }
  bool con1 = c1.tag == CT::Conical, con2 = c2.tag == CT::Conical;
  if (con1 != con2) {
    out.note = "only one side is conical";
    return out;
  }
  if (con1) return conical_equivalences(s1, s2, opt);
  int r = direction_profile(s1).r;
  if (direction_profile(s2).r != r) {
    out.note = "direction ranks differ";
    return out;
  }

  LinearSystemL L = assemble_L(s1, s2);
  ReducedL red = reduce_L(L, r);
  std::vector<MultiPoly> extras = opt.extra;
  if (opt.orthogonal)
    for (MultiPoly& e : orthogonality_conditions(red, opt.use_lambda))
      extras.push_back(std::move(e));
  BudgetCounter budget(default_budget());
  bool have_base = false;
  std::vector<MultiPoly> S;

  for (int case_id = 0; case_id < 2; ++case_id) {
    CaseSub cs;
    if (case_id == 0) {
      cs.fixed.emplace_back(Var::gamma, Scalar(1));
    } else {
      cs.fixed.emplace_back(Var::gamma, Scalar(0));
      cs.fixed.emplace_back(Var::delta, Scalar(1));
    }
    std::vector<Var> pvars = case_param_vars(cs, opt, red);

    // Stage 1: consistency conditions of the ruling system (plus any metric
    // conditions) often already cut the parameters down to finitely many
    // points; the base-curve conditions are then only needed as a filter.
    std::vector<MultiPoly> stage1;
    bool feasible = true;
    for (const auto& c : red.conditions)
      if (!push_case(stage1, c, cs)) feasible = false;
    for (const auto& c : extras)
      if (!push_case(stage1, c, cs)) feasible = false;
    if (!push_case(stage1, mobius_det_saturation(), cs)) feasible = false;
    if (!push_case(stage1, scale_saturation(), cs)) feasible = false;
    if (!feasible) continue;

    // The system usually splits by variable support (the ruling consistency
    // conditions live on the reparametrization block, the scale appears only
    // in the metric conditions, the undetermined matrix entries only in the
    // orthogonality rows). Chasing the blocks one at a time is far cheaper
    // than one joint basis over all unknowns.
    if (auto pts_c = cascade_solve(stage1, pvars, ambient_d, budget)) {
      for (const auto& pt : *pts_c) {
        if (!pt.all_scalar()) {
          out.algebraic.push_back(pt);
          continue;
        }
        auto se = candidate_from_point(s1, s2, red, pt, cs.fixed, opt);
        if (se) push_member(out.members, *se);
      }
      continue;
    }

    auto gb1 = buchberger(stage1, budget);
    if (trivial_basis(gb1)) continue;

    std::vector<SolutionPoint> pts;
    std::vector<MultiPoly> gb_final;
    bool infinite = false;
    if (ideal_dimension(gb1, pvars) == 0) {
      pts = solve_zero_dim(gb1, pvars, ambient_d, budget);
      gb_final = gb1;
    } else {
      // Stage 2: join the base-curve conditions.
      if (!have_base) {
        TranslationExpr tr = recover_translation(s1, s2, red);
        S = assemble_S(s1, s2, red, tr);
        have_base = true;
      }
      std::vector<MultiPoly> full = gb1;
      bool bad = false;
      for (const auto& c : S) {
        MultiPoly g = case_substitute(c, cs);
        if (g.is_zero()) continue;
        if (!g.is_constant()) g = normal_form(g, gb1, budget);
        if (g.is_zero()) continue;
        if (g.is_constant()) {
          bad = true;
          break;
        }
        full.push_back(g.primitive_scaled());
      }
      if (bad) continue;
      auto gb = buchberger(full, budget);
      if (trivial_basis(gb)) continue;
      if (ideal_dimension(gb, pvars) == 0) {
        pts = solve_zero_dim(gb, pvars, ambient_d, budget);
        gb_final = gb;
      } else {
        infinite = true;
        gb_final = gb;
      }
    }

    if (!infinite) {
      for (const auto& pt : pts) {
        if (!pt.all_scalar()) {
          out.algebraic.push_back(pt);
          continue;
        }
        auto se = candidate_from_point(s1, s2, red, pt, cs.fixed, opt);
        if (se) push_member(out.members, *se);
      }
    } else {
      InfiniteComponent comp;
      comp.gb = gb_final;
      for (Var v : independent_vars(gb_final, pvars))
        if (v != Var::u && v != Var::u2 && v != Var::lam)
          comp.free_vars.push_back(v);
      sample_family(s1, s2, red, cs, opt, pvars, ambient_d, budget, comp);
      if (!comp.samples.empty()) {
        out.family.push_back(std::move(comp));
      } else {
        out.note += (out.note.empty() ? "" : "; ");
        out.note +=
            "a positive-dimensional candidate component produced no verified "
            "specialization";
      }
    }
  }

  if (!out.family.empty())
    out.tag = EquivalenceSet::Tag::InfiniteFamily;
  else if (!out.members.empty() || !out.algebraic.empty())
    out.tag = EquivalenceSet::Tag::Finite;
  return out;
}

EquivalenceSet affine_equivalences(const RuledSurface& s1,
                                   const RuledSurface& s2) {
  return run_equivalence_pipeline(s1, s2, PipelineOptions{});
}

std::string equivalence_set_str(const EquivalenceSet& es) {
  std::ostringstream os;
  switch (es.tag) {
    case EquivalenceSet::Tag::None:
      os << "no equivalences";
      break;
    case EquivalenceSet::Tag::Finite:
      os << es.members.size() << " equivalence(s)";
      break;
    case EquivalenceSet::Tag::InfiniteFamily:
      os << "infinite family, " << es.family.size() << " component(s)";
      break;
    case EquivalenceSet::Tag::NotSupported:
      os << "not supported";
      break;
  }
  int idx = 0;
  for (const auto& m : es.members) {
    os << "\n[" << idx++ << "] A = " << mat3_str(m.f.A)
       << ", b = " << vec3_str(m.f.b) << ", phi: " << m.phi.str();
  }
  idx = 0;
  for (const auto& comp : es.family) {
    os << "\ncomponent " << idx++ << ": free(";
    for (size_t i = 0; i < comp.free_vars.size(); ++i)
      os << (i ? ", " : "") << var_name(comp.free_vars[i]);
    os << "), " << comp.samples.size() << " sample(s)";
    for (const auto& m : comp.samples)
      os << "\n  sample: A = " << mat3_str(m.f.A)
         << ", b = " << vec3_str(m.f.b) << ", phi: " << m.phi.str();
  }
  if (!es.algebraic.empty()) {
    os << "\nalgebraic solution points (outside the quadratic field):";
    for (const auto& pt : es.algebraic) os << "\n  " << pt.str();
  }
  if (es.reduction) {
    os << "\nsection direction " << vec3_str(es.reduction->direction)
       << ", curve (" << es.reduction->section[0].str() << ", "
       << es.reduction->section[1].str() << ", "
       << es.reduction->section[2].str() << ")";
  }
  if (!es.note.empty()) os << "\nnote: " << es.note;
  return os.str();
}

}  // namespace ruled
