#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bimenger/bigraph.hpp"
#include "bimenger/simplex.hpp"

namespace bimenger {

/// Edges of g' other than f, in graph order: the x columns of the primal.
inline std::vector<EdgeId> primal_edge_order(const BidirectedGraph& g_prime, EdgeId f) {
  std::vector<EdgeId> out;
  for (const auto& e : g_prime.edges())
    if (e.id != f) out.push_back(e.id);
  return out;
}

/// maximise x_f  s.t.  ½Mx + ½a x_f = 0,  0 <= x <= 1,  0 <= x_f <= |E(g')|.
/// Columns are primal_edge_order(g', f) followed by x_f; rows follow the
/// vertex order of g'. The cap on x_f never binds: the row of s forces x_f
/// to equal the number of chosen edges at s.
inline LpProblem build_primal(const BidirectedGraph& g_prime, EdgeId f) {
  const auto order = primal_edge_order(g_prime, f);
  const std::size_t n = order.size() + 1;
  const Rational half = make_rational(1, 2);
  LpProblem p;
  p.objective.assign(n, Rational(0));
  p.objective[n - 1] = 1;
  p.a_eq = RationalMatrix(g_prime.num_vertices(), n, Rational(0));
  p.b_eq.assign(g_prime.num_vertices(), Rational(0));
  p.lower.assign(n, Rational(0));
  p.upper.assign(n, Rational(1));
  p.upper[n - 1] = Rational(static_cast<long>(g_prime.num_edges()));
  auto fill = [&](const Edge& e, std::size_t col) {
    p.a_eq(g_prime.index_of(e.u), col) = half * to_int(e.sign_u);
    p.a_eq(g_prime.index_of(e.v), col) = half * to_int(e.sign_v);
  };
  for (std::size_t c = 0; c < order.size(); ++c) fill(g_prime.edge(order[c]), c);
  fill(g_prime.edge(f), n - 1);
  return p;
}

/// minimise 1ᵀy  s.t.  ½Mᵀz + y >= 0,  ½aᵀz >= 1,  y >= 0, z free; encoded as
/// a maximisation of -1ᵀy with z = z⁺ - z⁻ and one surplus column per row.
/// Column blocks: z⁺ (one per vertex), z⁻, y (one per non-f edge), surplus
/// (one per non-f edge, then f's).
struct DualProgram {
  LpProblem lp;
  std::size_t num_z = 0;  // vertices of g'
  std::size_t num_y = 0;  // edges of g' other than f

  std::size_t z_plus(std::size_t v) const { return v; }
  std::size_t z_minus(std::size_t v) const { return num_z + v; }
  std::size_t y(std::size_t e) const { return 2 * num_z + e; }
  std::size_t surplus(std::size_t row) const { return 2 * num_z + num_y + row; }

  std::vector<Rational> z_values(const std::vector<Rational>& x) const {
    std::vector<Rational> z(num_z);
    for (std::size_t v = 0; v < num_z; ++v) z[v] = x[z_plus(v)] - x[z_minus(v)];
    return z;
  }
  std::vector<Rational> y_values(const std::vector<Rational>& x) const {
    return {x.begin() + static_cast<std::ptrdiff_t>(y(0)), x.begin() + static_cast<std::ptrdiff_t>(y(0) + num_y)};
  }
};

inline DualProgram build_dual(const BidirectedGraph& g_prime, EdgeId f) {
  const auto order = primal_edge_order(g_prime, f);
  DualProgram d;
  d.num_z = g_prime.num_vertices();
  d.num_y = order.size();
  const std::size_t rows = d.num_y + 1;
  const std::size_t cols = 2 * d.num_z + d.num_y + rows;
  const Rational half = make_rational(1, 2);
  LpProblem& p = d.lp;
  p.objective.assign(cols, Rational(0));
  p.a_eq = RationalMatrix(rows, cols, Rational(0));
  p.b_eq.assign(rows, Rational(0));
  p.lower.assign(cols, Rational(0));
  p.upper.assign(cols, std::nullopt);
  auto fill_z = [&](const Edge& e, std::size_t row) {
    for (const auto& [w, sign] : {std::pair{e.u, e.sign_u}, std::pair{e.v, e.sign_v}}) {
      const std::size_t v = g_prime.index_of(w);
      p.a_eq(row, d.z_plus(v)) = half * to_int(sign);
      p.a_eq(row, d.z_minus(v)) = -half * to_int(sign);
    }
    p.a_eq(row, d.surplus(row)) = -1;
  };
  for (std::size_t r = 0; r < order.size(); ++r) {
    fill_z(g_prime.edge(order[r]), r);
    p.a_eq(r, d.y(r)) = 1;
    p.objective[d.y(r)] = -1;
  }
  fill_z(g_prime.edge(f), rows - 1);
  p.b_eq[rows - 1] = 1;
  return d;
}

}  // namespace bimenger
