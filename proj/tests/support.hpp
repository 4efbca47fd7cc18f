#pragma once

// Test-side helpers: small graph builders and brute-force enumerators written
// directly from the definitions, independent of the library's search code.

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bimenger/bimenger.hpp"

namespace support {

using namespace bimenger;

inline VertexId V(const char* n) { return VertexId(n); }

inline VertexSet vs(std::initializer_list<const char*> names) {
  VertexSet out;
  for (auto n : names) out.emplace_back(n);
  return out;
}

inline Sign sign_of(char c) { return c == '+' ? Sign::plus : Sign::minus; }

// Edges as "u v su sv" tokens, e.g. {"a","b","+-"}.
struct E {
  const char* u;
  const char* v;
  const char* signs;
};

inline BidirectedGraph graph(std::initializer_list<const char*> vertices, std::initializer_list<E> edges) {
  std::vector<VertexId> vids;
  for (auto v : vertices) vids.emplace_back(v);
  std::vector<EdgeSpec> specs;
  for (const auto& e : edges) specs.push_back({V(e.u), V(e.v), sign_of(e.signs[0]), sign_of(e.signs[1]), {}});
  return build_graph(vids, specs);
}

inline BidirectedGraph without_edge(const BidirectedGraph& g, EdgeId drop) {
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (e.id != drop) edges.push_back(e);
  return BidirectedGraph::from_parts(g.vertices(), edges);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline InstanceFile fixture(const std::string& name) { return parse_instance(read_file(std::string(FIXTURE_DIR) + "/" + name)); }

// Every walk of g with at most `max_edges` edges that uses distinct edges,
// as (vertex sequence, edge positions); trivial walks included.
struct RawWalk {
  std::vector<std::size_t> vertices;
  std::vector<std::size_t> edges;
};

inline void grow(const BidirectedGraph& g, RawWalk& w, std::size_t max_edges, std::vector<RawWalk>& out) {
  out.push_back(w);
  if (w.edges.size() == max_edges) return;
  const std::size_t here = w.vertices.back();
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    if (std::find(w.edges.begin(), w.edges.end(), k) != w.edges.end()) continue;
    const Edge& e = g.edges()[k];
    const VertexId& hv = g.vertices()[here];
    if (!e.has_endpoint(hv)) continue;
    if (!w.edges.empty()) {
      const Edge& prev = g.edges()[w.edges.back()];
      if (prev.sign_at(hv) == e.sign_at(hv)) continue;  // must alternate
    }
    w.edges.push_back(k);
    w.vertices.push_back(g.index_of(e.other(hv)));
    grow(g, w, max_edges, out);
    w.edges.pop_back();
    w.vertices.pop_back();
  }
}

inline std::vector<RawWalk> all_trails(const BidirectedGraph& g, std::size_t max_edges) {
  std::vector<RawWalk> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    RawWalk w{{v}, {}};
    grow(g, w, max_edges, out);
  }
  return out;
}

inline bool distinct(std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

// Canonical key of a path up to reversal: its edge sequence (or the vertex
// for a trivial path), oriented so the smaller reading comes first.
inline std::vector<long> path_key(const RawWalk& w) {
  if (w.edges.empty()) return {-1 - static_cast<long>(w.vertices[0])};
  std::vector<long> a(w.edges.begin(), w.edges.end());
  std::vector<long> b(a.rbegin(), a.rend());
  return std::min(a, b);
}

// A-B paths (distinct vertices), deduplicated up to reversal.
inline std::set<std::vector<long>> naive_paths(const BidirectedGraph& g, const VertexSet& A, const VertexSet& B,
                                               bool nontrivial_only = false) {
  std::set<std::vector<long>> out;
  auto in = [&](const VertexSet& s, std::size_t v) {
    return std::find(s.begin(), s.end(), g.vertices()[v]) != s.end();
  };
  for (const auto& w : all_trails(g, g.num_vertices())) {
    if (!distinct(w.vertices)) continue;
    if (nontrivial_only && w.edges.empty()) continue;
    const bool forward = in(A, w.vertices.front()) && in(B, w.vertices.back());
    const bool backward = in(B, w.vertices.front()) && in(A, w.vertices.back());
    if (forward || backward) out.insert(path_key(w));
  }
  return out;
}

// Almost paths at v: nontrivial closed trails at v, other vertices distinct,
// deduplicated up to reversal (keyed by edge sequence).
inline std::set<std::vector<long>> naive_almost_paths(const BidirectedGraph& g, const VertexId& v) {
  std::set<std::vector<long>> out;
  const std::size_t vi = g.index_of(v);
  for (const auto& w : all_trails(g, g.num_vertices())) {
    if (w.edges.empty() || w.vertices.front() != vi || w.vertices.back() != vi) continue;
    std::vector<std::size_t> inner(w.vertices.begin() + 1, w.vertices.end() - 1);
    if (!distinct(inner) || std::count(inner.begin(), inner.end(), vi)) continue;
    out.insert(path_key(w));
  }
  return out;
}

// Vertex sets of all nontrivial paths with both ends in A.
inline std::vector<std::set<std::size_t>> naive_piece_vertex_sets(const BidirectedGraph& g, const VertexSet& A) {
  std::vector<std::set<std::size_t>> out;
  auto in = [&](std::size_t v) { return std::find(A.begin(), A.end(), g.vertices()[v]) != A.end(); };
  for (const auto& w : all_trails(g, g.num_vertices()))
    if (!w.edges.empty() && distinct(w.vertices) && in(w.vertices.front()) && in(w.vertices.back()))
      out.emplace_back(w.vertices.begin(), w.vertices.end());
  return out;
}

// Footprints (vertex sets with weights) of every X-Y link, built from the
// naive enumerators: X-Y paths (weight 1) and disjoint pairs of nontrivial
// X-X and Y-Y paths (weight 2).
struct Footprint {
  std::set<std::size_t> vertices;
  int weight;
};

inline std::vector<Footprint> naive_link_footprints(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y) {
  std::vector<Footprint> out;
  auto in = [&](const VertexSet& s, std::size_t v) {
    return std::find(s.begin(), s.end(), g.vertices()[v]) != s.end();
  };
  for (const auto& w : all_trails(g, g.num_vertices())) {
    if (!distinct(w.vertices)) continue;
    if (in(X, w.vertices.front()) && in(Y, w.vertices.back()))
      out.push_back({{w.vertices.begin(), w.vertices.end()}, 1});
  }
  const auto xx = naive_piece_vertex_sets(g, X);
  const auto yy = naive_piece_vertex_sets(g, Y);
  for (const auto& a : xx)
    for (const auto& b : yy) {
      std::vector<std::size_t> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      std::set<std::size_t> u = a;
      u.insert(b.begin(), b.end());
      out.push_back({u, 2});
    }
  return out;
}

// Maximum total weight of pairwise vertex-disjoint footprints, by plain
// recursion over the list.
inline int naive_max_packing(const std::vector<Footprint>& fps, std::size_t from = 0, std::set<std::size_t> used = {}) {
  int best = 0;
  for (std::size_t i = from; i < fps.size(); ++i) {
    bool clash = false;
    for (auto v : fps[i].vertices)
      if (used.count(v)) clash = true;
    if (clash) continue;
    auto next = used;
    next.insert(fps[i].vertices.begin(), fps[i].vertices.end());
    best = std::max(best, fps[i].weight + naive_max_packing(fps, i + 1, next));
  }
  return best;
}

// Smallest number of vertices meeting every footprint, over all subsets.
inline std::size_t naive_min_hitting(const BidirectedGraph& g, const std::vector<Footprint>& fps) {
  const std::size_t n = g.num_vertices();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    bool all = true;
    for (const auto& f : fps) {
      bool hit = false;
      for (auto v : f.vertices)
        if (mask >> v & 1) hit = true;
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) best = size;
  }
  return best;
}

inline InstanceFile random_case(std::uint64_t seed, std::size_t max_n, std::size_t max_m, std::size_t max_set = 3) {
  SeededRng rng(seed * 7919 + 17);
  GenParams p;
  p.seed = seed;
  p.n = 2 + rng.below(max_n - 1);
  p.m = rng.below(max_m + 1);
  p.x_size = 1 + rng.below(std::min(max_set, p.n - 1));
  p.y_size = 1 + rng.below(std::min(max_set, p.n - p.x_size));
  return random_instance(p);
}

}  // namespace support
