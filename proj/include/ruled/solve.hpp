#pragma once

#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "ruled/algnum.hpp"
#include "ruled/groebner.hpp"
#include "ruled/multipoly.hpp"

namespace ruled {

struct dimension_error : std::runtime_error {
  int dimension;
  explicit dimension_error(int dim)
      : std::runtime_error("system is not zero-dimensional (dimension " + std::to_string(dim) +
                           ")"),
        dimension(dim) {}
};

using SolveValue = std::variant<Scalar, AlgNum>;

bool solve_value_is_scalar(const SolveValue& v);
const Scalar& solve_value_scalar(const SolveValue& v);
double solve_value_approx(const SolveValue& v);
std::string solve_value_str(const SolveValue& v);
bool solve_values_equal(const SolveValue& a, const SolveValue& b);

struct SolutionPoint {
  std::map<Var, SolveValue> coords;

  const SolveValue& at(Var v) const { return coords.at(v); }
  bool has(Var v) const { return coords.count(v) != 0; }
  // True when every coordinate lies in the ambient field.
  bool all_scalar() const;
  std::string str() const;
};

// All real solutions of a zero-dimensional ideal given by a reduced lex
// Groebner basis.  Each solution appears exactly once.  Coordinates come back
// as Scalar whenever the value lies in Q or Q(sqrt(ambient_d)) (with the field
// discovered from the defining quadratic when ambient_d == 0), AlgNum
// otherwise.  Throws dimension_error on positive dimension and
// budget_exceeded when the fallback solving strategies run out.
std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb,
                                          const std::vector<Var>& ring_vars, long ambient_d,
                                          BudgetCounter& budget);
std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb,
                                          const std::vector<Var>& ring_vars, long ambient_d = 0);
// Variable set inferred from the basis itself.
std::vector<SolutionPoint> solve_zero_dim(const std::vector<MultiPoly>& gb);

// Variables that actually occur in the basis, sorted by rank (highest first).
std::vector<Var> vars_of(const std::vector<MultiPoly>& gb);

}  // namespace ruled
