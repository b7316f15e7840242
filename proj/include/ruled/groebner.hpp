#pragma once

#include <stdexcept>
#include <vector>

#include "ruled/multipoly.hpp"

namespace ruled {

// Raised when the reduction-step budget is exhausted.
struct budget_exceeded : std::runtime_error {
  explicit budget_exceeded(long budget)
      : std::runtime_error("polynomial solver budget exceeded (" + std::to_string(budget) +
                           " reduction steps); set RULED_EQUIV_BUDGET to raise") {}
  explicit budget_exceeded(const std::string& why) : std::runtime_error(why) {}
};

// Reduction budget from RULED_EQUIV_BUDGET, default 10^7 steps.
long default_budget();

class BudgetCounter {
 public:
  explicit BudgetCounter(long limit) : limit_(limit) {}
  void step(long n = 1) {
    used_ += n;
    if (used_ > limit_) throw budget_exceeded(limit_);
  }
  long used() const { return used_; }

 private:
  long used_ = 0;
  long limit_;
};

// Full normal form of f modulo G (top and tail reduction).
MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& G, BudgetCounter& budget);

// Reduced lexicographic Groebner basis (monic leading coefficients, sorted by
// increasing leading monomial, deterministic).  Sugar selection strategy with
// the Gebauer-Moeller pair update.  Throws budget_exceeded.
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens, BudgetCounter& budget);
std::vector<MultiPoly> buchberger(const std::vector<MultiPoly>& gens);  // fresh default budget

bool is_ideal_member(const MultiPoly& f, const std::vector<MultiPoly>& gb, BudgetCounter& budget);

// Krull dimension of the variety cut out by gb inside the space of ring_vars;
// -1 when the basis contains a nonzero constant (empty variety).  Derived from
// the staircase of leading monomials.
int ideal_dimension(const std::vector<MultiPoly>& gb, const std::vector<Var>& ring_vars);

// A maximum-size independent variable set realizing the dimension
// (deterministic: first in lexicographic subset order among maximum ones).
std::vector<Var> independent_vars(const std::vector<MultiPoly>& gb,
                                  const std::vector<Var>& ring_vars);

}  // namespace ruled
