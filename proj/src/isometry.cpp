#include "ruled/isometry.hpp"

#include <stdexcept>

#include "ruled/mobius.hpp"

namespace ruled {

namespace {

RuledSurface in_standard_form(const RuledSurface& s) {
  return s.normalized ? s : normalize(s);
}

Reparam identity_reparam(int n) {
  Reparam r;
  r.n = n;
  r.c = RatFunc(Scalar(0));
  return r;
}

}  // namespace

std::vector<MultiPoly> norm_conditions(const RuledSurface& s1in,
                                       const RuledSurface& s2in,
                                       bool use_lambda) {
  RuledSurface s1 = in_standard_form(s1in);
  RuledSurface s2 = in_standard_form(s2in);
  if (s1.n != s2.n)
    throw std::invalid_argument("norm conditions need equal direction degrees");
  const int n = s1.n;
  UniPoly lhs;
  for (int i = 0; i < 3; ++i) lhs += s1.q[i] * s1.q[i];
  PPoly rhs;
  for (int i = 0; i < 3; ++i) {
    PPoly Qi{mobius_numerator_sym(s2.q[i], n)};
    rhs += Qi * Qi;
  }
  MultiPoly k2 = MultiPoly::variable(Var::k) * MultiPoly::variable(Var::k);
  std::vector<MultiPoly> out;
  out.reserve(2 * n + 1);
  for (int l = 0; l <= 2 * n; ++l) {
    MultiPoly lc = use_lambda
                       ? MultiPoly::variable(Var::lam).mul_scalar(lhs.coeff(l))
                       : MultiPoly(lhs.coeff(l));
    MultiPoly rc = l <= rhs.deg() ? rhs.coeff(l) : MultiPoly(0);
    out.push_back(lc - k2 * rc);
  }
  return out;
}

EquivalenceSet isometries(const RuledSurface& s1in, const RuledSurface& s2in) {
  RuledSurface s1 = in_standard_form(s1in);
  RuledSurface s2 = in_standard_form(s2in);
  PipelineOptions opt;
  opt.orthogonal = true;
  if (s1.n == s2.n) opt.extra = norm_conditions(s1, s2, false);
  return run_equivalence_pipeline(s1, s2, opt);
}

EquivalenceSet similarities(const RuledSurface& s1in,
                            const RuledSurface& s2in) {
  RuledSurface s1 = in_standard_form(s1in);
  RuledSurface s2 = in_standard_form(s2in);
  PipelineOptions opt;
  opt.orthogonal = true;
  opt.use_lambda = true;
  if (s1.n == s2.n) opt.extra = norm_conditions(s1, s2, true);
  return run_equivalence_pipeline(s1, s2, opt);
}

EquivalenceSet symmetries(const RuledSurface& s) { return isometries(s, s); }

std::vector<ScalarEquiv> involutions(const RuledSurface& sin) {
  RuledSurface s = in_standard_form(sin);
  EquivalenceSet es = symmetries(s);
  std::vector<ScalarEquiv> out;
  for (const auto& m : es.members) {
    if (m.f == AffineMap{}) continue;
    if (!(compose(m.f, m.f) == AffineMap{})) continue;
    if (!same_reparam(reparam_after(m.phi, m.phi), identity_reparam(s.n)))
      continue;
    out.push_back(m);
  }
  return out;
}

IsometryKind classify_isometry(const AffineMap& f) {
  if (!is_orthogonal(f.A))
    throw std::invalid_argument("classification needs an orthogonal matrix");
  const Mat3 I = mat3_identity();
  if (f.A == I)
    return is_zero(f.b) ? IsometryKind::Identity : IsometryKind::Translation;

  std::vector<std::vector<Scalar>> m(3, std::vector<Scalar>(3, Scalar(0)));
  std::vector<Scalar> rhs(3, Scalar(0));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j)
      m[i][j] = f.A[i][j] - (i == j ? Scalar(1) : Scalar(0));
    rhs[i] = Scalar(0) - f.b[i];
  }
  bool has_fixed_point = solve_linear(std::move(m), std::move(rhs)).consistent;
  Scalar tr = trace(f.A);

  if (det(f.A) == Scalar(1)) {
    // Proper: eigenvalues {1, e^{i theta}, e^{-i theta}}, trace = 1 + 2cos.
    if (tr == Scalar(-1))
      return has_fixed_point ? IsometryKind::AxialSymmetry
                             : IsometryKind::TranslationComposite;
    return has_fixed_point ? IsometryKind::Rotation
                           : IsometryKind::TranslationComposite;
  }
  // Improper: eigenvalues {-1, e^{i theta}, e^{-i theta}}, trace = -1 + 2cos.
  if (f.A == Scalar(-1) * I) return IsometryKind::CentralSymmetry;
  if (tr == Scalar(1))
    return has_fixed_point ? IsometryKind::Reflection
                           : IsometryKind::TranslationComposite;
  // theta != 0: A - I is invertible, a unique fixed point always exists.
  return IsometryKind::RotationReflection;
}

std::string isometry_kind_str(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::Identity: return "identity";
    case IsometryKind::Translation: return "translation";
    case IsometryKind::CentralSymmetry: return "central symmetry";
    case IsometryKind::Reflection: return "reflection";
    case IsometryKind::AxialSymmetry: return "axial symmetry";
    case IsometryKind::Rotation: return "rotation";
    case IsometryKind::RotationReflection: return "rotation+reflection";
    case IsometryKind::TranslationComposite: return "translation composite";
  }
  return "?";
}

bool closed_under_composition(const std::vector<ScalarEquiv>& members) {
  for (const auto& f : members)
    for (const auto& g : members) {
      AffineMap h = compose(f.f, g.f);
      bool found = false;
      for (const auto& m : members)
        if (m.f == h) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  return true;
}

}  // namespace ruled
