#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bimenger/bigraph.hpp"
#include "bimenger/walks.hpp"

namespace bimenger {

struct OracleLimits {
  std::size_t max_vertices = 10;
  std::size_t max_edges = 16;
};

struct PackingResult {
  int value = 0;  // turnarounds count twice
  std::vector<Link> links;
};

struct SeparatorResult {
  bool infinite = false;
  std::size_t size = 0;
  VertexSet vertices;
};

namespace detail {

using Mask = std::uint64_t;

inline void check_limits(const BidirectedGraph& g, const OracleLimits& limits) {
  if (g.num_vertices() > limits.max_vertices || g.num_edges() > limits.max_edges || g.num_vertices() > 40)
    throw Error(ErrorKind::size_bound_exceeded,
                std::to_string(g.num_vertices()) + " vertices / " + std::to_string(g.num_edges()) +
                    " edges exceeds the oracle bound of " + std::to_string(limits.max_vertices) + " / " +
                    std::to_string(limits.max_edges));
}

inline Mask mask_of(const std::vector<std::size_t>& vs) {
  Mask m = 0;
  for (auto p : vs) m |= Mask{1} << p;
  return m;
}

struct LinkItem {
  int weight = 0;
  Link witness;
};

// Distinct vertex footprints of links, keeping the heaviest witness per
// footprint. `free_links` counts links with an empty footprint (direct s-t
// edges in the terminal version); those never conflict with anything.
struct LinkTable {
  std::map<Mask, LinkItem> items;
  std::vector<Link> free_links;

  void offer(Mask m, int weight, const auto& make_link) {
    auto it = items.find(m);
    if (it == items.end()) items.emplace(m, LinkItem{weight, make_link()});
    else if (weight > it->second.weight) it->second = LinkItem{weight, make_link()};
  }
};

struct Piece {
  Mask mask;
  Walk walk;
};

inline std::vector<Piece> distinct_pieces(std::vector<Piece> pieces) {
  std::map<Mask, Piece> seen;
  for (auto& p : pieces) seen.emplace(p.mask, std::move(p));
  std::vector<Piece> out;
  for (auto& [m, p] : seen) out.push_back(std::move(p));
  return out;
}

inline LinkTable xy_link_table(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y) {
  LinkTable table;
  const auto in_x = membership(g, X);
  const auto in_y = membership(g, Y);
  for_each_path(g, in_x, in_y, [&](const auto& vs, const auto& es) {
    table.offer(mask_of(vs), 1, [&] { return Link::path(to_walk(g, vs, es)); });
  });
  auto collect = [&](const std::vector<char>& in) {
    std::vector<Piece> out;
    for_each_path(g, in, in, [&](const auto& vs, const auto& es) {
      if (!es.empty()) out.push_back({mask_of(vs), to_walk(g, vs, es)});
    });
    return distinct_pieces(std::move(out));
  };
  const auto xx = collect(in_x);
  const auto yy = collect(in_y);
  for (const auto& a : xx)
    for (const auto& b : yy)
      if ((a.mask & b.mask) == 0)
        table.offer(a.mask | b.mask, 2, [&] { return Link::turnaround(a.walk, b.walk); });
  return table;
}

inline LinkTable st_link_table(const BidirectedGraph& g, std::size_t s, std::size_t t) {
  LinkTable table;
  const Mask terminals = (Mask{1} << s) | (Mask{1} << t);
  std::vector<char> in_s(g.num_vertices(), 0), in_t(g.num_vertices(), 0);
  in_s[s] = 1;
  in_t[t] = 1;
  for_each_path(g, in_s, in_t, [&](const auto& vs, const auto& es) {
    const Mask inner = mask_of(vs) & ~terminals;
    if (inner == 0) table.free_links.push_back(Link::path(to_walk(g, vs, es)));
    else table.offer(inner, 1, [&] { return Link::path(to_walk(g, vs, es)); });
  });
  auto collect = [&](std::size_t v) {
    std::vector<Piece> out;
    for_each_almost_path(g, v, [&](const auto& vs, const auto& es) {
      out.push_back({mask_of(vs), to_walk(g, vs, es)});
    });
    return distinct_pieces(std::move(out));
  };
  const auto ss = collect(s);
  const auto tt = collect(t);
  for (const auto& a : ss)
    for (const auto& b : tt)
      if ((a.mask & b.mask) == 0)
        table.offer((a.mask | b.mask) & ~terminals, 2, [&] { return Link::turnaround(a.walk, b.walk); });
  return table;
}

// Maximum total weight of pairwise disjoint footprints, by memoised search
// over the set of still-available vertices: the lowest available vertex is
// either left unused or covered by a footprint whose lowest vertex it is.
class PackingSolver {
 public:
  explicit PackingSolver(const std::map<Mask, LinkItem>& items) {
    for (const auto& [m, item] : items) {
      if (m == 0) continue;
      by_low_[std::countr_zero(m)].push_back({m, item.weight});
    }
  }

  int best(Mask available) {
    if (available == 0) return 0;
    if (auto it = memo_.find(available); it != memo_.end()) return it->second.first;
    const int low = std::countr_zero(available);
    const Mask rest = available & (available - 1);
    int value = best(rest);
    Mask pick = 0;
    for (const auto& [m, w] : by_low_[low]) {
      if ((m & ~available) != 0) continue;
      const int v = w + best(available & ~m);
      if (v > value) {
        value = v;
        pick = m;
      }
    }
    memo_.emplace(available, std::make_pair(value, pick));
    return value;
  }

  std::vector<Mask> choice(Mask available) {
    std::vector<Mask> out;
    while (available != 0) {
      best(available);
      const Mask pick = memo_.at(available).second;
      if (pick == 0) {
        available &= available - 1;
      } else {
        out.push_back(pick);
        available &= ~pick;
      }
    }
    return out;
  }

 private:
  std::map<int, std::vector<std::pair<Mask, int>>> by_low_;
  std::unordered_map<Mask, std::pair<int, Mask>> memo_;
};

inline PackingResult max_packing(const LinkTable& table, Mask universe) {
  PackingSolver solver(table.items);
  PackingResult out;
  for (Mask m : solver.choice(universe)) {
    const auto& item = table.items.at(m);
    out.value += item.weight;
    out.links.push_back(item.witness);
  }
  for (const auto& l : table.free_links) {
    out.value += l.weight();
    out.links.push_back(l);
  }
  return out;
}

// Smallest hitting set among `candidates`, searched by increasing size and,
// within a size, in lexicographic order of vertex names.
inline SeparatorResult min_hitting_set(const BidirectedGraph& g, const std::vector<Mask>& footprints,
                                       std::vector<std::size_t> candidates) {
  std::sort(candidates.begin(), candidates.end(),
            [&](std::size_t a, std::size_t b) { return g.vertices()[a] < g.vertices()[b]; });
  auto hits_all = [&](Mask s) {
    for (Mask m : footprints)
      if ((m & s) == 0) return false;
    return true;
  };
  const std::size_t n = candidates.size();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask s = 0;
      for (auto i : idx) s |= Mask{1} << candidates[i];
      if (hits_all(s)) {
        SeparatorResult out;
        out.size = k;
        for (auto i : idx) out.vertices.push_back(g.vertices()[candidates[i]]);
        return out;
      }
      // next combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  SeparatorResult none;
  none.infinite = true;
  return none;
}

inline std::vector<Mask> footprints(const LinkTable& table) {
  std::vector<Mask> out;
  for (const auto& [m, item] : table.items) out.push_back(m);
  return out;
}

inline Mask all_vertices(const BidirectedGraph& g) {
  return g.num_vertices() == 64 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
}

}  // namespace detail

/// Maximum weight family of pairwise vertex-disjoint X-Y links.
inline PackingResult oracle_max_links(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y,
                                      const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  require_vertices(g, X);
  require_vertices(g, Y);
  return detail::max_packing(detail::xy_link_table(g, X, Y), detail::all_vertices(g));
}

/// Smallest S with no X-Y link in g - S.
inline SeparatorResult oracle_min_separator(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y,
                                            const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  require_vertices(g, X);
  require_vertices(g, Y);
  std::vector<std::size_t> candidates(g.num_vertices());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  return detail::min_hitting_set(g, detail::footprints(detail::xy_link_table(g, X, Y)), candidates);
}

/// Whether g contains any X-Y link. Exhaustive.
inline bool has_xy_link(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y,
                        const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  return !detail::xy_link_table(g, X, Y).items.empty();
}

inline bool has_st_link(const BidirectedGraph& g, const VertexId& s, const VertexId& t,
                        const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  const auto table = detail::st_link_table(g, g.index_of(s), g.index_of(t));
  return !table.items.empty() || !table.free_links.empty();
}

/// Whether g contains a nontrivial X-X path.
inline bool has_x_path(const BidirectedGraph& g, const VertexSet& X, const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  bool found = false;
  const auto in_x = detail::membership(g, X);
  detail::for_each_path(g, in_x, in_x, [&](const auto&, const auto& es) { found = found || !es.empty(); });
  return found;
}

/// Whether some nontrivial X-X path and nontrivial Y-Y path are vertex-disjoint.
inline bool has_xy_turnaround(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y,
                              const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  const auto table = detail::xy_link_table(g, X, Y);
  for (const auto& [m, item] : table.items)
    if (item.witness.kind == LinkKind::turnaround) return true;
  return false;
}

struct StOracleResult {
  PackingResult packing;
  SeparatorResult separator;
};

/// Internally vertex-disjoint s-t links and the minimum separator avoiding s
/// and t. A direct s-t edge makes the separator infinite.
inline StOracleResult oracle_st(const BidirectedGraph& g, const VertexId& s, const VertexId& t,
                                const OracleLimits& limits = {}) {
  if (s == t) throw Error(ErrorKind::equal_terminals, s.str());
  detail::check_limits(g, limits);
  const std::size_t si = g.index_of(s);
  const std::size_t ti = g.index_of(t);
  const auto table = detail::st_link_table(g, si, ti);
  const detail::Mask inner = detail::all_vertices(g) & ~((detail::Mask{1} << si) | (detail::Mask{1} << ti));
  StOracleResult out;
  out.packing = detail::max_packing(table, inner);
  if (!table.free_links.empty()) {
    out.separator.infinite = true;
    return out;
  }
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < g.num_vertices(); ++i)
    if (i != si && i != ti) candidates.push_back(i);
  out.separator = detail::min_hitting_set(g, detail::footprints(table), candidates);
  return out;
}

struct XPathOracleResult {
  int max_packing = 0;
  std::size_t min_hitting = 0;
  std::vector<Walk> paths;
  VertexSet hitting_set;
};

/// Nontrivial X-X paths: maximum disjoint packing and minimum hitting set.
inline XPathOracleResult oracle_xpaths(const BidirectedGraph& g, const VertexSet& X,
                                       const OracleLimits& limits = {}) {
  detail::check_limits(g, limits);
  require_vertices(g, X);
  detail::LinkTable table;
  const auto in_x = detail::membership(g, X);
  detail::for_each_path(g, in_x, in_x, [&](const auto& vs, const auto& es) {
    if (!es.empty()) table.offer(detail::mask_of(vs), 1, [&] { return Link::path(detail::to_walk(g, vs, es)); });
  });
  XPathOracleResult out;
  const auto packing = detail::max_packing(table, detail::all_vertices(g));
  out.max_packing = packing.value;
  for (const auto& l : packing.links) out.paths.push_back(l.source_part);
  std::vector<std::size_t> candidates(g.num_vertices());
  for (std::size_t i = 0; i < candidates.size(); ++i) candidates[i] = i;
  const auto sep = detail::min_hitting_set(g, detail::footprints(table), candidates);
  out.min_hitting = sep.size;
  out.hitting_set = sep.vertices;
  return out;
}

}  // namespace bimenger
