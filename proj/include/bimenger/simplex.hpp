#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "bimenger/error.hpp"
#include "bimenger/rational.hpp"

namespace bimenger {

/// maximise cᵀx  subject to  A x = b,  lower <= x <= upper  (upper may be absent).
struct LpProblem {
  std::vector<Rational> objective;
  RationalMatrix a_eq;
  std::vector<Rational> b_eq;
  std::vector<Rational> lower;
  std::vector<std::optional<Rational>> upper;

  std::size_t num_vars() const noexcept { return objective.size(); }
  std::size_t num_rows() const noexcept { return b_eq.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> values;
  Rational objective_value;
  std::vector<std::size_t> basis;  // structural variables that are basic
  std::size_t pivots = 0;
};

namespace detail {

// Dense bounded-variable primal simplex over exact rationals. Variables are
// shifted to [0, u - l]; rows are negated so the right-hand side is
// nonnegative. Phase one starts from an artificial identity basis, except
// that a column which already is a positive unit vector in its row is used
// directly. Bland's rule (lowest index) on both entering and leaving choices.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LpProblem& p) : n_(p.num_vars()), m_(p.num_rows()) {
    if (p.a_eq.rows() != m_ || p.a_eq.cols() != n_ || p.lower.size() != n_ || p.upper.size() != n_)
      throw Error(ErrorKind::dimension_mismatch, "LP dimensions are inconsistent");
    total_ = n_ + m_;
    tab_ = RationalMatrix(m_, total_, Rational(0));
    upper_.assign(total_, std::nullopt);
    value_.assign(total_, Rational(0));
    basic_row_.assign(total_, npos);
    basis_.assign(m_, npos);
    lower_ = p.lower;

    std::vector<Rational> rhs(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      rhs[r] = p.b_eq[r];
      for (std::size_t c = 0; c < n_; ++c)
        if (sgn(p.a_eq(r, c)) != 0) rhs[r] -= p.a_eq(r, c) * p.lower[c];
    }
    for (std::size_t c = 0; c < n_; ++c) {
      if (p.upper[c]) {
        if (*p.upper[c] < p.lower[c]) infeasible_bounds_ = true;
        upper_[c] = *p.upper[c] - p.lower[c];
      }
    }
    for (std::size_t r = 0; r < m_; ++r) {
      const bool flip = sgn(rhs[r]) < 0;
      for (std::size_t c = 0; c < n_; ++c) tab_(r, c) = flip ? Rational(-p.a_eq(r, c)) : p.a_eq(r, c);
      rhs_.push_back(flip ? Rational(-rhs[r]) : rhs[r]);
      tab_(r, n_ + r) = 1;
    }
    objective_.assign(total_, Rational(0));
    for (std::size_t c = 0; c < n_; ++c) objective_[c] = p.objective[c];
  }

  LpSolution solve() {
    LpSolution out;
    if (infeasible_bounds_) return out;
    crash_basis();
    // Phase one: maximise minus the sum of artificials.
    std::vector<Rational> phase_one(total_, Rational(0));
    for (std::size_t r = 0; r < m_; ++r) phase_one[n_ + r] = -1;
    if (run(phase_one, true) != LpStatus::optimal) return out;  // cannot happen: bounded by 0
    for (std::size_t r = 0; r < m_; ++r)
      if (sgn(value_[n_ + r]) != 0) return out;  // infeasible
    drive_out_artificials();
    for (std::size_t r = 0; r < m_; ++r) upper_[n_ + r] = Rational(0);

    out.status = run(objective_, false);
    out.pivots = pivots_;
    if (out.status != LpStatus::optimal) return out;
    out.values.resize(n_);
    out.objective_value = 0;
    for (std::size_t c = 0; c < n_; ++c) {
      out.values[c] = value_[c] + lower_[c];
      out.objective_value += objective_[c] * out.values[c];
    }
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) out.basis.push_back(basis_[r]);
    std::sort(out.basis.begin(), out.basis.end());
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void crash_basis() {
    for (std::size_t r = 0; r < m_; ++r) {
      std::size_t chosen = n_ + r;
      for (std::size_t c = 0; c < n_ && chosen == n_ + r; ++c) {
        if (basic_row_[c] != npos || sgn(tab_(r, c)) <= 0) continue;
        bool unit = true;
        for (std::size_t k = 0; k < m_ && unit; ++k)
          if (k != r && sgn(tab_(k, c)) != 0) unit = false;
        if (!unit) continue;
        const Rational level = rhs_[r] / tab_(r, c);
        if (upper_[c] && level > *upper_[c]) continue;
        chosen = c;
      }
      if (chosen != n_ + r) {
        const Rational scale = tab_(r, chosen);
        for (std::size_t c = 0; c < total_; ++c)
          if (sgn(tab_(r, c)) != 0) tab_(r, c) /= scale;
        rhs_[r] /= scale;
      }
      basis_[r] = chosen;
      basic_row_[chosen] = r;
      value_[chosen] = rhs_[r];
    }
    // Unused artificials sit at zero; lock them out.
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] != n_ + r) upper_[n_ + r] = Rational(0);
  }

  bool at_upper(std::size_t j) const { return upper_[j] && value_[j] == *upper_[j]; }

  LpStatus run(const std::vector<Rational>& cost, bool phase_one) {
    while (true) {
      if (phase_one) {
        bool clear = true;
        for (std::size_t r = 0; r < m_ && clear; ++r)
          if (sgn(value_[n_ + r]) != 0) clear = false;
        if (clear) return LpStatus::optimal;
      }
      // Reduced costs d_j = c_j - c_Bᵀ T_j, Bland entering choice.
      std::size_t entering = npos;
      int direction = 0;
      for (std::size_t j = 0; j < total_ && entering == npos; ++j) {
        if (basic_row_[j] != npos) continue;
        if (upper_[j] && sgn(*upper_[j]) == 0) continue;
        Rational d = cost[j];
        for (std::size_t r = 0; r < m_; ++r)
          if (sgn(tab_(r, j)) != 0 && sgn(cost[basis_[r]]) != 0) d -= cost[basis_[r]] * tab_(r, j);
        if (sgn(d) > 0 && !at_upper(j)) {
          entering = j;
          direction = 1;
        } else if (sgn(d) < 0 && sgn(value_[j]) > 0) {
          entering = j;
          direction = -1;
        }
      }
      if (entering == npos) return LpStatus::optimal;

      // Ratio test.
      std::optional<Rational> step;
      std::size_t leave_row = npos;
      bool leave_to_upper = false;
      if (upper_[entering]) step = *upper_[entering];
      for (std::size_t r = 0; r < m_; ++r) {
        const int s = sgn(tab_(r, entering)) * direction;
        if (s == 0) continue;
        const std::size_t b = basis_[r];
        Rational limit;
        bool to_upper = false;
        if (s > 0) {
          limit = value_[b] / abs(tab_(r, entering));
        } else {
          if (!upper_[b]) continue;
          limit = (*upper_[b] - value_[b]) / abs(tab_(r, entering));
          to_upper = true;
        }
        const bool better = !step || limit < *step ||
                            (limit == *step && leave_row != npos && b < basis_[leave_row]) ||
                            (limit == *step && leave_row == npos && b < entering);
        if (better) {
          step = limit;
          leave_row = r;
          leave_to_upper = to_upper;
        }
      }
      if (!step) return LpStatus::unbounded;

      const Rational delta = direction > 0 ? *step : Rational(-*step);
      if (sgn(delta) != 0) {
        value_[entering] += delta;
        for (std::size_t r = 0; r < m_; ++r)
          if (sgn(tab_(r, entering)) != 0) value_[basis_[r]] -= tab_(r, entering) * delta;
      }
      if (leave_row == npos) continue;  // bound flip
      const std::size_t leaving = basis_[leave_row];
      value_[leaving] = leave_to_upper ? *upper_[leaving] : Rational(0);
      pivot(leave_row, entering);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    ++pivots_;
    const Rational p = tab_(row, col);
    auto prow = tab_.row(row);
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < total_; ++c) {
      if (sgn(prow[c]) == 0) continue;
      prow[c] /= p;
      nz.push_back(c);
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row) continue;
      const Rational factor = tab_(r, col);
      if (sgn(factor) == 0) continue;
      auto cur = tab_.row(r);
      for (std::size_t c : nz) cur[c] -= factor * prow[c];
    }
    basic_row_[basis_[row]] = npos;
    basis_[row] = col;
    basic_row_[col] = row;
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t c = 0; c < n_; ++c) {
        if (basic_row_[c] != npos || sgn(tab_(r, c)) == 0) continue;
        pivot(r, c);  // degenerate: the artificial is at zero
        break;
      }
    }
  }

  std::size_t n_, m_, total_ = 0;
  RationalMatrix tab_;
  std::vector<Rational> rhs_;
  std::vector<Rational> objective_;
  std::vector<Rational> lower_;
  std::vector<std::optional<Rational>> upper_;
  std::vector<Rational> value_;
  std::vector<std::size_t> basic_row_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
  bool infeasible_bounds_ = false;
};

}  // namespace detail

/// Exact basic optimum (a vertex of the feasible polyhedron) of a
/// maximisation problem.
inline LpSolution simplex_max(const LpProblem& p) { return detail::BoundedSimplex(p).solve(); }

/// Whether `x` satisfies every equality and bound of `p` exactly.
inline bool satisfies(const LpProblem& p, const std::vector<Rational>& x) {
  if (x.size() != p.num_vars()) return false;
  for (std::size_t c = 0; c < x.size(); ++c) {
    if (x[c] < p.lower[c]) return false;
    if (p.upper[c] && x[c] > *p.upper[c]) return false;
  }
  for (std::size_t r = 0; r < p.num_rows(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < x.size(); ++c)
      if (sgn(p.a_eq(r, c)) != 0) lhs += p.a_eq(r, c) * x[c];
    if (lhs != p.b_eq[r]) return false;
  }
  return true;
}

}  // namespace bimenger
