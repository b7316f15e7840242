#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ruled/groebner.hpp"
#include "ruled/linalg.hpp"
#include "ruled/mobius.hpp"
#include "ruled/multipoly.hpp"
#include "ruled/solve.hpp"
#include "ruled/surface.hpp"

namespace ruled {

// Univariate polynomial in t whose coefficients are polynomials in the
// solving parameters.
using PPoly = Poly<MultiPoly>;

// Ruling-matching system: block-diagonal scalar matrix acting on the rows of
// A, with right-hand sides symbolic in k, alpha, beta, gamma, delta.
struct LinearSystemL {
  std::vector<std::vector<Scalar>> A;  // 3(n+1) x 9, unknowns A11..A33
  std::vector<MultiPoly> rhs;          // 3(n+1) entries
  int n = 0;
};

// Requires matching degrees and normalized inputs.
LinearSystemL assemble_L(const RuledSurface& s1, const RuledSurface& s2);

// Gauss-Jordan reduction of L: every A entry expressed in the solving
// parameters (three entries stay free parameters when r = 2), plus the
// consistency conditions with the common factor k removed.
struct ReducedL {
  std::array<std::array<MultiPoly, 3>, 3> A;
  std::vector<Var> free_entries;    // free A variables, only when r = 2
  std::vector<MultiPoly> conditions;  // P_A: homogeneous of degree n
  int r = 0;
};

ReducedL reduce_L(const LinearSystemL& L, int r);

// Entries of A^T A - scale I for the reduced symbolic matrix, with scale the
// similarity unknown `lam` or the constant 1.  Six polynomials (the product
// is symmetric).
std::vector<MultiPoly> orthogonality_conditions(const ReducedL& red,
                                                bool use_lambda = false);

// Translation vector and ruling shift with the parameters still symbolic.
// The components of b live over a shared denominator, and c(t) is a ratio of
// t-polynomials with parameter coefficients; exact division in the parameter
// ring is generally impossible, so fractions are kept explicit.
struct TranslationExpr {
  std::array<MultiPoly, 3> b_num;
  MultiPoly b_den;
  PPoly c_num;
  PPoly c_den;
};

TranslationExpr recover_translation(const RuledSurface& s1,
                                    const RuledSurface& s2,
                                    const ReducedL& red);

// Polynomial system S: coefficients of the residual of the base-curve part
// of the defining functional equation after substituting the symbolic A, b,
// and c, together with P_A and the saturation constraints.
std::vector<MultiPoly> assemble_S(const RuledSurface& s1,
                                  const RuledSurface& s2, const ReducedL& red,
                                  const TranslationExpr& tr);

// One verified equivalence: f(x) = A x + b together with the parameter-plane
// map phi(t,s) = (psi(t), k (gamma t + delta)^n s + c(t)).
struct ScalarEquiv {
  AffineMap f;
  Reparam phi;
};

struct InfiniteComponent {
  std::vector<MultiPoly> gb;
  std::vector<Var> free_vars;
  std::vector<ScalarEquiv> samples;  // at least two verified members
};

// Section data accompanying the unsupported cylindrical case.
struct CylindricalReduction {
  Vec3 direction;
  std::array<RatFunc, 3> section;
};

struct EquivalenceSet {
  enum class Tag { None, Finite, InfiniteFamily, NotSupported };
  Tag tag = Tag::None;
  std::vector<ScalarEquiv> members;            // Finite
  std::vector<InfiniteComponent> family;       // InfiniteFamily
  std::vector<SolutionPoint> algebraic;        // exact non-quadratic solutions
  std::optional<CylindricalReduction> reduction;  // NotSupported
  std::string note;
};

// Hooks that specialize the shared pipeline for the metric variants.
struct PipelineOptions {
  std::vector<MultiPoly> extra;  // joined into the parameter-solving stage
  bool orthogonal = false;       // require A^T A = (scale) I, symbolically and
                                 // on every concrete candidate
  bool use_lambda = false;       // similarity scale lambda^2 as unknown `lam`
};

EquivalenceSet run_equivalence_pipeline(const RuledSurface& s1,
                                        const RuledSurface& s2,
                                        const PipelineOptions& opt);

// All affine maps f with f(S1) = S2.
EquivalenceSet affine_equivalences(const RuledSurface& s1,
                                   const RuledSurface& s2);

// Exact test of f . x1 == x2 . phi as rational function triples.
bool verify(const AffineMap& f, const Reparam& phi, const RuledSurface& s1,
            const RuledSurface& s2);

// Exact translation recovery for concrete parameters; nullopt when the
// candidate admits no translation (extraneous solution).
std::optional<std::pair<Vec3, RatFunc>> recover_translation_concrete(
    const RuledSurface& s1, const RuledSurface& s2, const Mat3& A,
    const MobiusMap& psi, const Scalar& k);

// Turns one solution of the parameter system into a verified equivalence:
// evaluates the reduced matrix, recovers b and c exactly, and keeps the
// candidate only if it passes verify().  `fixed` supplies values for
// variables eliminated before solving (case normalizations, sampled family
// parameters).  Non-Scalar solution coordinates yield nullopt.
std::optional<ScalarEquiv> candidate_from_point(
    const RuledSurface& s1, const RuledSurface& s2, const ReducedL& red,
    const SolutionPoint& pt, const std::vector<std::pair<Var, Scalar>>& fixed,
    const PipelineOptions& opt);

// Variable of the A entry in row i, column j (0-based).
Var a_var(int i, int j);

std::string equivalence_set_str(const EquivalenceSet& es);

}  // namespace ruled
