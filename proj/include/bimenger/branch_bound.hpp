#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bimenger/rational.hpp"
#include "bimenger/simplex.hpp"

namespace bimenger {

struct IntegerSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> values;
  Rational objective_value;
  LpSolution relaxation;  // root LP optimum
  std::size_t nodes = 0;
};

namespace detail {

inline Rational floor_of(const Rational& q) {
  mpz_class out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

class BranchAndBound {
 public:
  BranchAndBound(const LpProblem& p, const std::vector<std::size_t>& integer_cols)
      : problem_(p), integer_(p.num_vars(), 0) {
    for (std::size_t c : integer_cols) integer_.at(c) = 1;
    integral_objective_ = true;
    for (std::size_t c = 0; c < p.num_vars(); ++c)
      if (sgn(p.objective[c]) != 0 && (!integer_[c] || !is_integral(p.objective[c]))) integral_objective_ = false;
  }

  IntegerSolution run() {
    IntegerSolution out;
    out.relaxation = simplex_max(problem_);
    if (out.relaxation.status == LpStatus::unbounded)
      throw Error(ErrorKind::invalid_params, "branch and bound needs a bounded relaxation");
    if (out.relaxation.status == LpStatus::optimal) explore(problem_, out.relaxation, out);
    out.nodes = nodes_;
    return out;
  }

 private:
  // Depth first; the rounded-up branch is tried first.
  void explore(LpProblem& p, const LpSolution& lp, IntegerSolution& out) {
    ++nodes_;
    if (out.status == LpStatus::optimal) {
      const Rational bound = integral_objective_ ? floor_of(lp.objective_value) : lp.objective_value;
      if (bound <= out.objective_value) return;
    }
    std::optional<std::size_t> branch;
    for (std::size_t c = 0; c < p.num_vars() && !branch; ++c)
      if (integer_[c] && !is_integral(lp.values[c])) branch = c;
    if (!branch) {
      out.status = LpStatus::optimal;
      out.values = lp.values;
      out.objective_value = lp.objective_value;
      return;
    }
    const std::size_t c = *branch;
    const Rational down = floor_of(lp.values[c]);
    const Rational saved_lower = p.lower[c];
    const std::optional<Rational> saved_upper = p.upper[c];
    for (int side = 0; side < 2; ++side) {
      if (side == 0) {
        p.lower[c] = down + 1;
        p.upper[c] = saved_upper;
      } else {
        p.lower[c] = saved_lower;
        p.upper[c] = down;
      }
      if (p.upper[c] && *p.upper[c] < p.lower[c]) continue;
      const LpSolution child = simplex_max(p);
      if (child.status == LpStatus::optimal) explore(p, child, out);
    }
    p.lower[c] = saved_lower;
    p.upper[c] = saved_upper;
  }

  LpProblem problem_;
  std::vector<char> integer_;
  bool integral_objective_ = false;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Exact integer optimum of a bounded LP by branch and bound on the listed
/// columns, with exact simplex relaxations at every node.
inline IntegerSolution integer_max(const LpProblem& p, const std::vector<std::size_t>& integer_cols) {
  return detail::BranchAndBound(p, integer_cols).run();
}

}  // namespace bimenger
