#pragma once

#include <string>
#include <vector>

#include "ruled/equiv.hpp"

namespace ruled {

// Coefficient equations of |q1(t)|^2 = k^2 sum_i Q_i(t)^2 with
// Q_i = (gamma t + delta)^n q2_i(psi(t)); one equation per power of t,
// exactly 2n+1 entries, zero entries kept.  With use_lambda the left side
// carries the similarity scale: lam |q1|^2 = k^2 sum Q_i^2.
std::vector<MultiPoly> norm_conditions(const RuledSurface& s1,
                                       const RuledSurface& s2,
                                       bool use_lambda = false);

// All isometries f with f(S1) = S2: the affine pipeline plus the norm
// equations and the symbolic orthogonality of A.
EquivalenceSet isometries(const RuledSurface& s1, const RuledSurface& s2);

// All similarities f(S1) = S2 with A^T A = lam I, lam > 0 the squared ratio.
EquivalenceSet similarities(const RuledSurface& s1, const RuledSurface& s2);

// Self-isometries; the identity is always a member.
EquivalenceSet symmetries(const RuledSurface& s);

// Nontrivial symmetries of order two: f o f = id exactly, on both the space
// map and the parameter-plane map.
std::vector<ScalarEquiv> involutions(const RuledSurface& s);

enum class IsometryKind {
  Identity,
  Translation,
  CentralSymmetry,        // x -> -x + b
  Reflection,             // mirror plane
  AxialSymmetry,          // half-turn about a line
  Rotation,               // rotation about a line, angle != 0, pi
  RotationReflection,     // rotation composed with a mirror
  TranslationComposite,   // screw motion or glide reflection
};

// Exact classification by determinant, trace and fixed-point solvability.
// Throws std::invalid_argument when A is not orthogonal.
IsometryKind classify_isometry(const AffineMap& f);

std::string isometry_kind_str(IsometryKind kind);

// True when the composition of any two map parts appears among the members.
bool closed_under_composition(const std::vector<ScalarEquiv>& members);

}  // namespace ruled
