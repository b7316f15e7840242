#include "ruled/special.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ruled {

namespace {

MultiPoly mp(Var v) { return MultiPoly::variable(v); }

MultiPoly mobius_det_saturation() {
  return mp(Var::alpha) * mp(Var::delta) * mp(Var::u) -
         mp(Var::beta) * mp(Var::gamma) * mp(Var::u) - MultiPoly(1);
}

MultiPoly scale_saturation() { return mp(Var::k) * mp(Var::u2) - MultiPoly(1); }

bool trivial_basis(const std::vector<MultiPoly>& gb) {
  for (const auto& f : gb)
    if (!f.is_zero() && f.is_constant()) return true;
  return false;
}

bool same_equiv(const ScalarEquiv& a, const ScalarEquiv& b) {
  return a.f.A == b.f.A && a.f.b == b.f.b && same_reparam(a.phi, b.phi);
}

void push_member(std::vector<ScalarEquiv>& members, const ScalarEquiv& se) {
  for (const auto& m : members)
    if (same_equiv(m, se)) return;
  members.push_back(se);
}

// Rescales a verified cone equivalence: (sigma A, sigma k) still matches the
// rulings, and b, c are recovered again for the scaled matrix.
std::optional<ScalarEquiv> rescale_cone_map(const RuledSurface& s1,
                                            const RuledSurface& s2,
                                            const ScalarEquiv& se,
                                            const Scalar& sigma) {
  Mat3 A = sigma * se.f.A;
  Scalar k = se.phi.k * sigma;
  auto bc = recover_translation_concrete(s1, s2, A, se.phi.psi, k);
  if (!bc) return std::nullopt;
  ScalarEquiv scaled{AffineMap{A, bc->first},
                     Reparam{se.phi.psi, k, bc->second, s1.n}};
  if (!verify(scaled.f, scaled.phi, s1, s2)) return std::nullopt;
  return scaled;
}

Scalar first_entry(const Mat3& A) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!A[i][j].is_zero()) return A[i][j];
  throw std::logic_error("zero matrix cannot be an equivalence");
}

}  // namespace

EquivalenceSet conical_equivalences(const RuledSurface& s1in,
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
  if (classify(s1).tag != SurfaceClass::Tag::Conical ||
      classify(s2).tag != SurfaceClass::Tag::Conical)
    throw std::invalid_argument("conical_equivalences needs two cones");
  int r = direction_profile(s1).r;
  if (direction_profile(s2).r != r) {
    out.note = "direction ranks differ";
    return out;
  }

  // Every ruling passes through the vertex, so an equivalence is any
  // invertible A matching the rulings; b = v2 - A v1 is forced and c follows.
  // The base curve contributes no equations, hence only the ruling system is
  // solved here.
  LinearSystemL L = assemble_L(s1, s2);
  ReducedL red = reduce_L(L, r);
  std::vector<MultiPoly> extras = opt.extra;
  if (opt.orthogonal)
    for (MultiPoly& e : orthogonality_conditions(red, opt.use_lambda))
      extras.push_back(std::move(e));
  BudgetCounter budget(default_budget());

  for (int case_id = 0; case_id < 2; ++case_id) {
    std::vector<std::pair<Var, Scalar>> fixed;
    if (case_id == 0) {
      fixed.emplace_back(Var::gamma, Scalar(1));
    } else {
      fixed.emplace_back(Var::gamma, Scalar(0));
      fixed.emplace_back(Var::delta, Scalar(1));
    }
    std::set<int> fixed_set;
    for (const auto& [v, s] : fixed) fixed_set.insert(static_cast<int>(v));
    std::vector<Var> pvars{Var::u, Var::u2};
    for (Var f : red.free_entries) pvars.push_back(f);
    if (opt.use_lambda) pvars.push_back(Var::lam);
    pvars.push_back(Var::k);
    for (Var v : {Var::alpha, Var::beta, Var::gamma, Var::delta})
      if (!fixed_set.count(static_cast<int>(v))) pvars.push_back(v);
    std::sort(pvars.begin(), pvars.end(), [](Var a, Var b) {
      return static_cast<int>(a) < static_cast<int>(b);
    });

    std::vector<MultiPoly> gens;
    bool feasible = true;
    auto push = [&](const MultiPoly& f) {
      MultiPoly g = f;
      for (const auto& [v, s] : fixed) g = g.substitute(v, s);
      if (g.is_zero()) return;
      if (g.is_constant()) {
        feasible = false;
        return;
      }
      gens.push_back(g.primitive_scaled());
    };
    for (const auto& c : red.conditions) push(c);
    for (const auto& c : extras) push(c);
    push(mobius_det_saturation());
    push(scale_saturation());
    if (!feasible) continue;

    auto gb = buchberger(gens, budget);
    if (trivial_basis(gb)) continue;

    if (ideal_dimension(gb, pvars) == 0) {
      for (const auto& pt : solve_zero_dim(gb, pvars, ambient_d, budget)) {
        if (!pt.all_scalar()) {
          out.algebraic.push_back(pt);
          continue;
        }
        auto se = candidate_from_point(s1, s2, red, pt, fixed, opt);
        if (se) push_member(out.members, *se);
      }
    } else {
      // Without metric constraints the matrix of a cone equivalence is free
      // up to scale; k carries that scale.  Witnesses are normalized so the
      // first nonzero entry of A in row-major order is 1, plus its double.
      InfiniteComponent comp;
      comp.gb = gb;
      for (Var v : independent_vars(gb, pvars))
        if (v != Var::u && v != Var::u2 && v != Var::lam)
          comp.free_vars.push_back(v);
      std::vector<Scalar> pool{Scalar(1), Scalar(-1), Scalar(2),
                               Scalar(-2), Scalar(1, 2)};
      for (size_t attempt = 0;
           attempt < pool.size() && comp.samples.empty(); ++attempt) {
        auto fixed2 = fixed;
        for (size_t i = 0; i < comp.free_vars.size(); ++i)
          fixed2.emplace_back(comp.free_vars[i],
                              pool[(attempt + i) % pool.size()]);
        std::vector<MultiPoly> polys;
        bool ok = true;
        for (const auto& f : gb) {
          MultiPoly g = f;
          for (size_t i = fixed.size(); i < fixed2.size(); ++i)
            g = g.substitute(fixed2[i].first, fixed2[i].second);
          if (g.is_zero()) continue;
          if (g.is_constant()) {
            ok = false;
            break;
          }
          polys.push_back(g.primitive_scaled());
        }
        if (!ok) continue;
        std::vector<Var> pv2;
        for (Var v : pvars)
          if (std::find(comp.free_vars.begin(), comp.free_vars.end(), v) ==
              comp.free_vars.end())
            pv2.push_back(v);
        auto gb2 = buchberger(polys, budget);
        if (trivial_basis(gb2)) continue;
        if (ideal_dimension(gb2, pv2) != 0) continue;
        for (const auto& pt : solve_zero_dim(gb2, pv2, ambient_d, budget)) {
          auto se = candidate_from_point(s1, s2, red, pt, fixed2, opt);
          if (!se) continue;
          Scalar sigma = first_entry(se->f.A).inv();
          auto rep = rescale_cone_map(s1, s2, *se, sigma);
          if (!rep) continue;
          push_member(comp.samples, *rep);
          auto twice = rescale_cone_map(s1, s2, *rep, Scalar(2));
          if (twice) push_member(comp.samples, *twice);
          if (comp.samples.size() >= 2) break;
        }
      }
      if (!comp.samples.empty()) {
        out.family.push_back(std::move(comp));
        out.note = "cone matrices are determined up to scale";
      }
    }
  }

  if (!out.family.empty())
    out.tag = EquivalenceSet::Tag::InfiniteFamily;
  else if (!out.members.empty() || !out.algebraic.empty())
    out.tag = EquivalenceSet::Tag::Finite;
  return out;
}

CylindricalReduction cylindrical_reduce(const RuledSurface& s_in) {
  RuledSurface s = s_in.normalized ? s_in : normalize(s_in);
  for (int i = 0; i < 3; ++i)
    if (s.q[i].deg() > 0)
      throw std::invalid_argument(
          "cylindrical reduction needs a constant ruling direction");
  Vec3 w = vec3(s.q[0].coeff(0), s.q[1].coeff(0), s.q[2].coeff(0));
  Scalar ww = dot(w, w);
  if (ww.is_zero()) throw std::invalid_argument("zero ruling direction");
  // s(t) = -<p(t), w>/<w, w> drops the section onto the plane through the
  // origin orthogonal to w.
  RatFunc sval{Scalar(0)};
  for (int i = 0; i < 3; ++i) sval = sval - RatFunc(w[i]) * s.p[i];
  sval = sval * RatFunc(ww.inv());
  CylindricalReduction red;
  red.direction = w;
  for (int i = 0; i < 3; ++i) red.section[i] = s.p[i] + sval * RatFunc(w[i]);
  return red;
}

}  // namespace ruled
