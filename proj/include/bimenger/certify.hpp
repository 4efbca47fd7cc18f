#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimenger/bigraph.hpp"
#include "bimenger/branch_bound.hpp"
#include "bimenger/lp_programs.hpp"
#include "bimenger/oracle.hpp"
#include "bimenger/regularity.hpp"
#include "bimenger/reduce.hpp"
#include "bimenger/simplex.hpp"
#include "bimenger/walks.hpp"

namespace bimenger {

struct EdgeCut {
  std::vector<EdgeId> edges;
};

struct Decomposition {
  std::vector<Link> links;  // in g'
  std::size_t slack_cycles = 0;
};

namespace detail {

// f has sign + at s and - at t.
inline std::pair<VertexId, VertexId> terminals_of(const BidirectedGraph& g_prime, EdgeId f) {
  const Edge& e = g_prime.edge(f);
  if (e.sign_u == Sign::plus && e.sign_v == Sign::minus) return {e.u, e.v};
  if (e.sign_v == Sign::plus && e.sign_u == Sign::minus) return {e.v, e.u};
  throw Error(ErrorKind::not_normalized, "closing edge must have + at s and - at t");
}

inline Rational dual_term(const BidirectedGraph& g, const Edge& e, const std::vector<Rational>& z) {
  return to_int(e.sign_u) * z[g.index_of(e.u)] + to_int(e.sign_v) * z[g.index_of(e.v)];
}

}  // namespace detail

/// Splits an integral, balanced primal optimum into links of g'. The chosen
/// edges other than f form alternating segments between terminals: s-t
/// segments are paths, and s-s segments are paired with t-t segments (by
/// first edge id) into turnarounds. Closed alternating circuits avoiding s
/// and t carry no flow value and are dropped, but counted.
inline Decomposition decompose_packing(const BidirectedGraph& g_prime, EdgeId f, const std::vector<Rational>& x,
                                       const Rational& xf) {
  const auto order = primal_edge_order(g_prime, f);
  if (x.size() != order.size()) throw Error(ErrorKind::dimension_mismatch, "primal vector length");
  if (!is_integral(xf) || sgn(xf) < 0) throw Error(ErrorKind::not_integral, "x_f = " + to_string(xf));
  std::vector<char> chosen(g_prime.num_edges(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (x[c] == 1) chosen[g_prime.position_of(order[c])] = 1;
    else if (sgn(x[c]) != 0) throw Error(ErrorKind::not_integral, "x entry " + to_string(x[c]));
  }
  const auto [s, t] = detail::terminals_of(g_prime, f);
  const std::size_t si = g_prime.index_of(s);
  const std::size_t ti = g_prime.index_of(t);
  const long copies = xf.get_num().get_si();

  // Balance, counting x_f copies of f.
  for (std::size_t v = 0; v < g_prime.num_vertices(); ++v) {
    long balance = 0;
    for (const Incidence& inc : g_prime.incidences(v)) {
      const bool is_f = g_prime.edges()[inc.edge].id == f;
      const long mult = is_f ? copies : chosen[inc.edge];
      balance += mult * to_int(inc.here);
    }
    if (balance != 0) throw Error(ErrorKind::not_balanced, "vertex " + g_prime.vertices()[v].str());
  }

  std::vector<char> used(g_prime.num_edges(), 0);
  auto trace = [&](std::size_t start, const Incidence& first) {
    std::vector<std::size_t> vs{start, first.other};
    std::vector<std::size_t> es{first.edge};
    used[first.edge] = 1;
    Sign arrived = first.there;
    while (vs.back() != si && vs.back() != ti) {
      const std::size_t cur = vs.back();
      const Incidence* next = nullptr;
      for (const Incidence& inc : g_prime.incidences(cur))
        if (chosen[inc.edge] && !used[inc.edge] && inc.here != arrived) {
          next = &inc;
          break;
        }
      if (!next) throw Error(ErrorKind::not_balanced, "segment stuck at " + g_prime.vertices()[cur].str());
      used[next->edge] = 1;
      es.push_back(next->edge);
      vs.push_back(next->other);
      arrived = next->there;
    }
    return detail::to_walk(g_prime, vs, es);
  };

  std::vector<Walk> st_paths, at_s, at_t;
  for (std::size_t term : {si, ti}) {
    for (const Incidence& inc : g_prime.incidences(term)) {
      if (!chosen[inc.edge] || used[inc.edge]) continue;
      Walk w = trace(term, inc);
      if (!w.closed()) (term == si ? st_paths.push_back(std::move(w)) : st_paths.push_back(w.reversed()));
      else (term == si ? at_s : at_t).push_back(std::move(w));
    }
  }
  if (at_s.size() != at_t.size()) throw Error(ErrorKind::not_balanced, "unequal numbers of s-s and t-t segments");
  auto by_first_edge = [](const Walk& a, const Walk& b) { return a.edges.front() < b.edges.front(); };
  std::sort(at_s.begin(), at_s.end(), by_first_edge);
  std::sort(at_t.begin(), at_t.end(), by_first_edge);

  Decomposition out;
  for (auto& w : st_paths) out.links.push_back(Link::path(std::move(w)));
  for (std::size_t i = 0; i < at_s.size(); ++i) out.links.push_back(Link::turnaround(at_s[i], at_t[i]));

  // Leftover chosen edges: count their connected pieces.
  std::vector<std::size_t> parent(g_prime.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::set<std::size_t> touched;
  for (std::size_t k = 0; k < g_prime.num_edges(); ++k) {
    if (!chosen[k] || used[k]) continue;
    const Edge& e = g_prime.edges()[k];
    const std::size_t a = g_prime.index_of(e.u), b = g_prime.index_of(e.v);
    parent[find(a)] = find(b);
    touched.insert(a);
    touched.insert(b);
  }
  std::set<std::size_t> roots;
  for (auto v : touched) roots.insert(find(v));
  out.slack_cycles = roots.size();

  int weight = 0;
  for (const auto& l : out.links) weight += l.weight();
  if (weight != copies) throw Error(ErrorKind::not_balanced, "link weights do not add up to x_f");
  return out;
}

/// F = { e : σ(u,e) z_u + σ(v,e) z_v < 0 } after checking (z, y) against the
/// dual constraints. z follows the vertex order of g', y the primal edge
/// order.
inline EdgeCut extract_cut(const BidirectedGraph& g_prime, EdgeId f, const std::vector<Rational>& z,
                           const std::vector<Rational>& y) {
  const auto order = primal_edge_order(g_prime, f);
  if (z.size() != g_prime.num_vertices() || y.size() != order.size())
    throw Error(ErrorKind::dimension_mismatch, "dual vector length");
  const auto [s, t] = detail::terminals_of(g_prime, f);
  if (z[g_prime.index_of(s)] - z[g_prime.index_of(t)] < 2)
    throw Error(ErrorKind::dual_infeasible, "z_s - z_t < 2");
  Rational total = 0;
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (sgn(y[c]) < 0) throw Error(ErrorKind::dual_infeasible, "negative y");
    if (sgn(detail::dual_term(g_prime, g_prime.edge(order[c]), z) + 2 * y[c]) < 0)
      throw Error(ErrorKind::dual_infeasible, "edge constraint violated at edge " + std::to_string(order[c].value));
    total += y[c];
  }
  EdgeCut cut;
  for (const auto& e : g_prime.edges())
    if (sgn(detail::dual_term(g_prime, e, z)) < 0) cut.edges.push_back(e.id);
  if (std::find(cut.edges.begin(), cut.edges.end(), f) != cut.edges.end())
    throw Error(ErrorKind::verification_failure, "closing edge in the cut");
  if (Rational(static_cast<long>(cut.edges.size())) > total)
    throw Error(ErrorKind::verification_failure, "|F| exceeds 1ᵀy");
  return cut;
}

/// Everything produced while solving on the split graph g'. The primal
/// relaxation can have fractional vertices (an odd alternating cycle hanging
/// off a terminal carries half units), so the packing comes from its integer
/// optimum. Basic dual optima can be half-integral too; the cut is then read
/// from an integer dual optimum. Both LP optima are kept alongside.
struct LpArtifacts {
  SplitGraph split;
  VertexId s;
  VertexId t;
  LpSolution primal;  // relaxation of the primal program
  LpSolution dual;    // relaxation of the dual program
  IntegerSolution integer;
  std::optional<IntegerSolution> dual_integer;  // set when the LP optimum of the dual program is fractional
  std::vector<Rational> x;  // integer optimum, f excluded
  Rational xf;
  std::vector<Rational> z;
  std::vector<Rational> y;
  Rational primal_value;
  Rational dual_value;
  EdgeCut cut;
  Decomposition decomposition;
};

inline IntegerSolution solve_primal_integer(const BidirectedGraph& g_prime, EdgeId f) {
  const LpProblem p = build_primal(g_prime, f);
  std::vector<std::size_t> cols(p.num_vars());
  for (std::size_t c = 0; c < cols.size(); ++c) cols[c] = c;
  IntegerSolution out = integer_max(p, cols);
  if (out.status != LpStatus::optimal)
    throw Error(ErrorKind::verification_failure, "primal program not solved to optimality");
  return out;
}

/// Integer dual optimum over integral z and y, with |z_v| <= 2|V(g')| so the
/// search is finite. Any integral feasible point gives a cut with
/// |F| <= 1ᵀy; the cap only limits which one is found.
inline IntegerSolution solve_dual_integer(const BidirectedGraph& g_prime, EdgeId f) {
  DualProgram dual = build_dual(g_prime, f);
  const Rational cap(2 * static_cast<long>(g_prime.num_vertices()));
  std::vector<std::size_t> cols;
  for (std::size_t v = 0; v < dual.num_z; ++v) {
    dual.lp.upper[dual.z_plus(v)] = cap;
    dual.lp.upper[dual.z_minus(v)] = cap;
    cols.push_back(dual.z_plus(v));
    cols.push_back(dual.z_minus(v));
  }
  for (std::size_t e = 0; e < dual.num_y; ++e) cols.push_back(dual.y(e));
  IntegerSolution out = integer_max(dual.lp, cols);
  if (out.status != LpStatus::optimal)
    throw Error(ErrorKind::verification_failure, "no integral dual solution within the potential cap");
  return out;
}

inline LpArtifacts solve_split_lp(const SplitGraph& split) {
  LpArtifacts out;
  out.split = split;
  const BidirectedGraph& gp = split.graph;
  std::tie(out.s, out.t) = detail::terminals_of(gp, split.f);

  out.integer = solve_primal_integer(gp, split.f);
  out.primal = out.integer.relaxation;
  out.x.assign(out.integer.values.begin(), out.integer.values.end() - 1);
  out.xf = out.integer.values.back();
  out.primal_value = out.primal.objective_value;

  const DualProgram dual = build_dual(gp, split.f);
  out.dual = simplex_max(dual.lp);
  if (out.dual.status != LpStatus::optimal)
    throw Error(ErrorKind::verification_failure, "dual program not solved to optimality");
  out.dual_value = -out.dual.objective_value;
  const std::vector<Rational>* dual_point = &out.dual.values;
  if (!is_integral(out.dual.values)) {
    out.dual_integer = solve_dual_integer(gp, split.f);
    dual_point = &out.dual_integer->values;
  }
  out.z = dual.z_values(*dual_point);
  out.y = dual.y_values(*dual_point);

  out.decomposition = decompose_packing(gp, split.f, out.x, out.xf);
  out.cut = extract_cut(gp, split.f, out.z, out.y);
  return out;
}

enum class SeparatorCheck { verified, failed, unverified };

// Where the reported separator came from: a subset of the image of the dual
// cut, or the fallback search over all vertices.
enum class SeparatorSource { cut, search };

inline std::string_view to_string(SeparatorSource s) { return s == SeparatorSource::cut ? "cut" : "search"; }

inline std::string_view to_string(SeparatorCheck c) {
  switch (c) {
    case SeparatorCheck::verified: return "verified";
    case SeparatorCheck::failed: return "failed";
    case SeparatorCheck::unverified: return "unverified";
  }
  return "unknown";
}

struct CertificateChecks {
  bool duality = true;            // LP optimum of the primal program == LP optimum of the dual program
  bool balanced = true;
  bool links_valid = true;        // every link re-classifies in the original graph
  bool disjoint = true;
  bool value_matches = true;      // sum of link weights == value
  bool cut_bound = true;          // |F| <= 1ᵀy
  bool separator_bound = true;    // |S| <= bound
  SeparatorCheck separator = SeparatorCheck::unverified;
  std::size_t slack_cycles = 0;
  std::size_t separator_pruned = 0;  // cut-image vertices not needed to separate
  SeparatorSource separator_source = SeparatorSource::cut;

  // Diagnostics; not soundness conditions of the certificate.
  bool primal_integral = true;  // basic LP optimum of the primal program integral
  bool dual_integral = true;    // basic LP optimum of the dual program integral
  bool relaxation_tight = true; // LP optimum of the primal program == integer optimum

  bool all_passed() const {
    return duality && balanced && links_valid && disjoint && value_matches && cut_bound && separator_bound &&
           separator != SeparatorCheck::failed;
  }
};

struct MengerCertificate {
  int value = 0;
  std::vector<Link> links;
  VertexSet separator;
  int separator_bound = 0;  // value, or twice the packing for X-paths
  Rational primal_value;
  Rational dual_value;
  std::size_t cut_size = 0;
  CertificateChecks checks;
  std::optional<LpArtifacts> lp;
};

struct SolveOptions {
  OracleLimits verify_limits;
  bool verify_separator = true;
};

namespace detail {

inline bool within(const BidirectedGraph& g, const OracleLimits& limits) {
  return g.num_vertices() <= limits.max_vertices && g.num_edges() <= limits.max_edges;
}

inline VertexSet minus(const VertexSet& set, const VertexSet& drop) {
  VertexSet out;
  for (const auto& v : set)
    if (!contains(drop, v)) out.push_back(v);
  return out;
}

inline void fill_lp_checks(MengerCertificate& cert, const LpArtifacts& lp) {
  cert.primal_value = lp.primal_value;
  cert.dual_value = lp.dual_value;
  cert.cut_size = lp.cut.edges.size();
  cert.checks.duality = lp.primal_value == lp.dual_value;
  cert.checks.primal_integral = is_integral(lp.primal.values);
  cert.checks.dual_integral = is_integral(lp.dual.values);
  cert.checks.relaxation_tight = lp.primal_value == lp.xf;
  Rational y_total = 0;
  for (const auto& v : lp.y) y_total += v;
  cert.checks.cut_bound = Rational(static_cast<long>(lp.cut.edges.size())) <= y_total;
  cert.checks.slack_cycles = lp.decomposition.slack_cycles;
  cert.value = static_cast<int>(lp.xf.get_num().get_si());
}

// Integer optimum of the primal program for the X-Y instance; zero exactly when g has no
// X-Y link.
inline int integer_link_value(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y) {
  if (X.empty() || Y.empty()) return 0;
  const TerminalAttachment att = attach_terminals(g, X, Y);
  const SplitGraph split = split_and_close(att.graph, att.s, att.t);
  return static_cast<int>(solve_primal_integer(split.graph, split.f).objective_value.get_num().get_si());
}

inline int integer_st_value(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  const SplitGraph split = split_and_close(normalize_terminals(g, s, t), s, t);
  return static_cast<int>(solve_primal_integer(split.graph, split.f).objective_value.get_num().get_si());
}

// First set of each size (lexicographic by name) among subsets of `pool`
// for which `clear` holds, for sizes up to max_size; gives up once the
// number of candidate sets examined reaches `budget`.
template <class Clear>
std::optional<VertexSet> smallest_clear_subset(VertexSet pool, std::size_t max_size, std::size_t budget,
                                               Clear&& clear) {
  std::sort(pool.begin(), pool.end());
  std::optional<VertexSet> best;
  std::size_t examined = 0;
  for (std::size_t k = 0; k <= std::min(max_size, pool.size()) && !best && examined < budget; ++k) {
    for_each_combination(pool.size(), k, [&](const std::vector<std::size_t>& idx) {
      if (++examined > budget) return false;
      VertexSet trial;
      for (std::size_t i : idx) trial.push_back(pool[i]);
      if (clear(trial)) best = std::move(trial);
      return !best;
    });
  }
  return best;
}

inline constexpr std::size_t separator_search_budget = 2000;

// The cut image always separates. Its smallest separating subset is taken;
// if that still exceeds the bound (possible when the relaxation of the primal program is
// not tight), all vertices in `pool` are searched for a separator within it.
template <class Clear>
VertexSet choose_separator(const VertexSet& cut_image, const VertexSet& pool, int bound, CertificateChecks& checks,
                           Clear&& clear) {
  VertexSet sep = cut_image;
  if (auto sub = smallest_clear_subset(cut_image, cut_image.size(), separator_search_budget, clear)) sep = *sub;
  checks.separator_pruned = cut_image.size() - sep.size();
  checks.separator_source = SeparatorSource::cut;
  if (static_cast<int>(sep.size()) > bound) {
    if (auto found = smallest_clear_subset(pool, static_cast<std::size_t>(std::max(bound, 0)),
                                           separator_search_budget, clear)) {
      sep = *found;
      checks.separator_source = SeparatorSource::search;
    }
  }
  std::sort(sep.begin(), sep.end());
  return sep;
}

inline int total_weight(const std::vector<Link>& links) {
  int w = 0;
  for (const auto& l : links) w += l.weight();
  return w;
}

}  // namespace detail

/// Maximum packing of vertex-disjoint X-Y links (turnarounds count twice)
/// together with a separator no larger than it.
inline MengerCertificate solve_menger(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y,
                                      const SolveOptions& options = {}) {
  require_vertices(g, X);
  require_vertices(g, Y);
  MengerCertificate cert;
  if (X.empty() || Y.empty()) {
    cert.checks.separator = SeparatorCheck::verified;
    return cert;
  }
  const TerminalAttachment att = attach_terminals(g, X, Y);
  const SplitGraph split = split_and_close(att.graph, att.s, att.t);
  LpArtifacts lp = solve_split_lp(split);
  const MapChain chain{att.map, split.map};
  detail::fill_lp_checks(cert, lp);
  cert.links = map_links_back(chain, lp.decomposition.links);
  cert.separator_bound = cert.value;
  cert.separator = detail::choose_separator(
      map_cut_to_separator(chain, lp.cut.edges), g.vertices(), cert.separator_bound, cert.checks,
      [&](const VertexSet& sep) {
        return detail::integer_link_value(delete_vertices(g, sep), detail::minus(X, sep), detail::minus(Y, sep)) == 0;
      });

  for (const auto& l : cert.links) {
    const auto verdict = classify_link(g, l, X, Y).verdict;
    const LinkClass expected = l.kind == LinkKind::path ? LinkClass::path : LinkClass::turnaround;
    if (verdict != expected) cert.checks.links_valid = false;
  }
  cert.checks.disjoint = links_disjoint(cert.links);
  cert.checks.value_matches = detail::total_weight(cert.links) == cert.value;
  cert.checks.separator_bound = static_cast<int>(cert.separator.size()) <= cert.separator_bound;
  if (options.verify_separator && detail::within(g, options.verify_limits)) {
    const auto rest = delete_vertices(g, cert.separator);
    const bool clean = !has_xy_link(rest, detail::minus(X, cert.separator), detail::minus(Y, cert.separator),
                                    options.verify_limits);
    cert.checks.separator = clean ? SeparatorCheck::verified : SeparatorCheck::failed;
  }
  cert.lp = std::move(lp);
  return cert;
}

/// Internally vertex-disjoint s-t links against a separator avoiding s and t.
inline MengerCertificate solve_st(const BidirectedGraph& g, const VertexId& s, const VertexId& t,
                                  const SolveOptions& options = {}) {
  if (s == t) throw Error(ErrorKind::equal_terminals, s.str());
  if (!g.contains(s)) throw Error(ErrorKind::unknown_vertex, s.str());
  if (!g.contains(t)) throw Error(ErrorKind::unknown_vertex, t.str());
  if (has_direct_edge(g, s, t)) throw Error(ErrorKind::direct_terminal_edge, s.str() + "-" + t.str());
  const SplitGraph split = split_and_close(normalize_terminals(g, s, t), s, t);
  LpArtifacts lp = solve_split_lp(split);
  const MapChain chain{split.map};
  MengerCertificate cert;
  detail::fill_lp_checks(cert, lp);
  cert.links = map_links_back(chain, lp.decomposition.links);
  cert.separator_bound = cert.value;
  cert.separator = detail::choose_separator(
      map_cut_to_separator(chain, lp.cut.edges), g.vertices(), cert.separator_bound, cert.checks,
      [&](const VertexSet& sep) { return detail::integer_st_value(delete_vertices(g, sep), s, t) == 0; });

  for (const auto& l : cert.links) {
    const auto verdict = classify_link(g, l, {s}, {t}).verdict;
    const LinkClass expected = l.kind == LinkKind::path ? LinkClass::path : LinkClass::turnaround;
    if (verdict != expected) cert.checks.links_valid = false;
  }
  cert.checks.disjoint = links_internally_disjoint(cert.links, s, t);
  cert.checks.value_matches = detail::total_weight(cert.links) == cert.value;
  cert.checks.separator_bound = static_cast<int>(cert.separator.size()) <= cert.separator_bound &&
                                !detail::contains(cert.separator, s) && !detail::contains(cert.separator, t);
  if (options.verify_separator && detail::within(g, options.verify_limits)) {
    const bool clean = !has_st_link(delete_vertices(g, cert.separator), s, t, options.verify_limits);
    cert.checks.separator = clean ? SeparatorCheck::verified : SeparatorCheck::failed;
  }
  cert.lp = std::move(lp);
  return cert;
}

namespace detail {

// Maximum number of vertex-disjoint X-paths, via the doubled graph.
inline MengerCertificate doubled_solve(const BidirectedGraph& g, const VertexSet& X, DoubledGraph& doubled) {
  doubled = double_for_xpaths(g, X);
  SolveOptions quiet;
  quiet.verify_separator = false;
  return solve_menger(doubled.graph, doubled.X1, doubled.X2, quiet);
}

}  // namespace detail

/// Maximum packing of vertex-disjoint X-paths with a separator of at most
/// twice its size. Solved as X'-X'' links in two disjoint copies of g; the
/// X'-X' halves of the turnarounds are the paths, and the separator is the
/// part of the doubled separator lying in a copy that it clears of X-paths.
inline MengerCertificate solve_xpaths(const BidirectedGraph& g, const VertexSet& X, const SolveOptions& options = {}) {
  require_vertices(g, X);
  MengerCertificate cert;
  if (X.empty()) {
    cert.checks.separator = SeparatorCheck::verified;
    return cert;
  }
  DoubledGraph doubled;
  MengerCertificate twice = detail::doubled_solve(g, X, doubled);
  cert.primal_value = twice.primal_value;
  cert.dual_value = twice.dual_value;
  cert.cut_size = twice.cut_size;
  cert.checks = twice.checks;
  cert.checks.separator = SeparatorCheck::unverified;

  const MapChain back{doubled.map};
  for (const auto& l : twice.links) {
    if (l.kind != LinkKind::turnaround) {
      cert.checks.links_valid = false;
      continue;
    }
    cert.links.push_back(Link::path(map_links_back(back, {Link::path(l.source_part)}).front().source_part));
  }
  cert.value = static_cast<int>(cert.links.size());
  cert.separator_bound = 2 * cert.value;

  VertexSet first, second;
  const std::set<VertexId> copy_one(doubled.map.copy_one.begin(), doubled.map.copy_one.end());
  for (const auto& v : twice.separator)
    (copy_one.count(v) ? first : second).push_back(doubled.map.vertex_origin.at(v));
  std::vector<VertexSet> options_in_order{first, second};
  if (second.size() < first.size()) std::swap(options_in_order[0], options_in_order[1]);
  bool found = false;
  for (auto& candidate : options_in_order) {
    std::sort(candidate.begin(), candidate.end());
    const auto rest = delete_vertices(g, candidate);
    const auto rest_x = detail::minus(X, candidate);
    DoubledGraph scratch;
    const bool clear = rest_x.empty() || detail::doubled_solve(rest, rest_x, scratch).value == 0;
    if (clear) {
      cert.separator = candidate;
      found = true;
      break;
    }
  }
  if (!found) throw Error(ErrorKind::verification_failure, "neither copy of the doubled separator clears X-paths");

  for (const auto& l : cert.links) {
    const Walk& w = l.source_part;
    if (!is_path(g, w) || w.trivial() || !detail::contains(X, w.front()) || !detail::contains(X, w.back()))
      cert.checks.links_valid = false;
  }
  cert.checks.disjoint = links_disjoint(cert.links);
  cert.checks.value_matches = 2 * cert.value == twice.value;
  cert.checks.separator_bound = static_cast<int>(cert.separator.size()) <= cert.separator_bound;
  if (options.verify_separator && detail::within(g, options.verify_limits)) {
    const bool clean = !has_x_path(delete_vertices(g, cert.separator), detail::minus(X, cert.separator),
                                   options.verify_limits);
    cert.checks.separator = clean ? SeparatorCheck::verified : SeparatorCheck::failed;
  }
  cert.lp = std::move(twice.lp);
  return cert;
}

enum class NoTurnaroundVerdict { not_applicable, holds, fails };

struct NoTurnaroundReport {
  NoTurnaroundVerdict verdict = NoTurnaroundVerdict::not_applicable;
  int solver_value = 0;
  int oracle_max = 0;
  std::size_t oracle_min = 0;
};

/// Without X-Y turnarounds the packing of X-Y paths and the minimum separator
/// coincide; checks this on g when the precondition holds.
inline NoTurnaroundReport check_no_turnaround_equality(const BidirectedGraph& g, const VertexSet& X,
                                                       const VertexSet& Y, const OracleLimits& limits = {}) {
  NoTurnaroundReport report;
  if (has_xy_turnaround(g, X, Y, limits)) return report;
  report.solver_value = solve_menger(g, X, Y, {limits, true}).value;
  report.oracle_max = oracle_max_links(g, X, Y, limits).value;
  report.oracle_min = oracle_min_separator(g, X, Y, limits).size;
  const bool equal = report.solver_value == report.oracle_max &&
                     static_cast<std::size_t>(report.oracle_max) == report.oracle_min;
  report.verdict = equal ? NoTurnaroundVerdict::holds : NoTurnaroundVerdict::fails;
  return report;
}

/// Result of checking the dual cut against every s-t link of g' - f.
struct CutSoundness {
  bool f_excluded = true;
  bool bound_holds = true;     // |F| <= 1ᵀy
  bool every_link_hit = true;
  bool identity_holds = true;  // edge sums equal z_t - z_s (paths), 2(z_t - z_s) (turnarounds)
  std::size_t paths_checked = 0;
  std::size_t turnarounds_checked = 0;

  bool ok() const { return f_excluded && bound_holds && every_link_hit && identity_holds; }
};

/// Exhaustive; intended for oracle-scale instances.
inline CutSoundness verify_cut_soundness(const LpArtifacts& lp) {
  CutSoundness out;
  const BidirectedGraph& gp = lp.split.graph;
  const EdgeId f = lp.split.f;
  const std::set<EdgeId> cut(lp.cut.edges.begin(), lp.cut.edges.end());
  out.f_excluded = !cut.count(f);
  Rational y_total = 0;
  for (const auto& v : lp.y) y_total += v;
  out.bound_holds = Rational(static_cast<long>(cut.size())) <= y_total;

  std::vector<Edge> kept;
  for (const auto& e : gp.edges())
    if (e.id != f) kept.push_back(e);
  const BidirectedGraph open = BidirectedGraph::from_parts(gp.vertices(), std::move(kept));
  const Rational zs = lp.z[gp.index_of(lp.s)];
  const Rational zt = lp.z[gp.index_of(lp.t)];

  struct Part {
    Rational sum;
    bool hit = false;
    std::vector<std::size_t> vertices;
  };
  auto summarize = [&](const std::vector<std::size_t>& vs, const std::vector<std::size_t>& es) {
    Part p;
    for (auto k : es) {
      const Edge& e = open.edges()[k];
      p.sum += detail::dual_term(gp, e, lp.z);
      if (cut.count(e.id)) p.hit = true;
    }
    p.vertices = vs;
    std::sort(p.vertices.begin(), p.vertices.end());
    return p;
  };

  const std::size_t si = open.index_of(lp.s);
  const std::size_t ti = open.index_of(lp.t);
  std::vector<char> in_s(open.num_vertices(), 0), in_t(open.num_vertices(), 0);
  in_s[si] = 1;
  in_t[ti] = 1;
  detail::for_each_path(open, in_s, in_t, [&](const auto& vs, const auto& es) {
    const Part p = summarize(vs, es);
    ++out.paths_checked;
    if (!p.hit) out.every_link_hit = false;
    if (p.sum != zt - zs) out.identity_holds = false;
  });
  std::vector<Part> ss, tt;
  detail::for_each_almost_path(open, si, [&](const auto& vs, const auto& es) { ss.push_back(summarize(vs, es)); });
  detail::for_each_almost_path(open, ti, [&](const auto& vs, const auto& es) { tt.push_back(summarize(vs, es)); });
  for (const auto& a : ss)
    for (const auto& b : tt) {
      std::vector<std::size_t> common;
      std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                            std::back_inserter(common));
      if (!common.empty()) continue;
      ++out.turnarounds_checked;
      if (!a.hit && !b.hit) out.every_link_hit = false;
      if (a.sum + b.sum != 2 * (zt - zs)) out.identity_holds = false;
    }
  return out;
}

}  // namespace bimenger
