#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimenger/bigraph.hpp"

namespace bimenger {

/// Alternating vertex/edge sequence v0, e1, v1, ..., ek, vk.
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;

  std::size_t length() const noexcept { return edges.size(); }
  bool trivial() const noexcept { return edges.empty(); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  const VertexId& front() const { return vertices.front(); }
  const VertexId& back() const { return vertices.back(); }

  Walk reversed() const {
    return {{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
  }

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct WalkVerdict {
  bool valid = true;
  std::string reason;
  std::size_t position = 0;  // index into the vertex sequence of the first violation

  static WalkVerdict ok() { return {}; }
  static WalkVerdict fail(std::string why, std::size_t at) { return {false, std::move(why), at}; }
};

/// Consecutive edges must carry opposite signs at their shared vertex. The
/// first and last vertex impose nothing, even when the walk is closed.
inline WalkVerdict check_walk(const BidirectedGraph& g, const Walk& w) {
  if (w.vertices.empty()) return WalkVerdict::fail("empty walk", 0);
  if (w.vertices.size() != w.edges.size() + 1)
    return WalkVerdict::fail("vertex/edge count mismatch", 0);
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    if (!g.contains(w.vertices[i])) return WalkVerdict::fail("unknown vertex " + w.vertices[i].str(), i);
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (!g.contains(w.edges[i]))
      return WalkVerdict::fail("unknown edge " + std::to_string(w.edges[i].value), i);
    const Edge& e = g.edge(w.edges[i]);
    const bool joins = (e.u == w.vertices[i] && e.v == w.vertices[i + 1]) ||
                       (e.v == w.vertices[i] && e.u == w.vertices[i + 1]);
    if (!joins) return WalkVerdict::fail("edge does not join consecutive vertices", i);
  }
  for (std::size_t i = 1; i + 1 < w.vertices.size(); ++i) {
    const Edge& in = g.edge(w.edges[i - 1]);
    const Edge& out = g.edge(w.edges[i]);
    if (in.sign_at(w.vertices[i]) == out.sign_at(w.vertices[i]))
      return WalkVerdict::fail("signs do not alternate", i);
  }
  return WalkVerdict::ok();
}

namespace detail {

template <class T>
bool all_distinct(std::vector<T> items) {
  std::sort(items.begin(), items.end());
  return std::adjacent_find(items.begin(), items.end()) == items.end();
}

inline bool contains(const VertexSet& set, const VertexId& v) {
  return std::find(set.begin(), set.end(), v) != set.end();
}

template <class T>
bool disjoint(std::vector<T> a, std::vector<T> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) ++i;
    else if (*j < *i) ++j;
    else return false;
  }
  return true;
}

}  // namespace detail

inline bool is_path(const BidirectedGraph& g, const Walk& w) {
  return check_walk(g, w).valid && detail::all_distinct(w.vertices);
}

/// Closed trail with at least two edges, vertices distinct except start = end.
inline bool is_almost_path(const BidirectedGraph& g, const Walk& w) {
  if (w.length() < 2 || !w.closed() || !check_walk(g, w).valid) return false;
  if (!detail::all_distinct(w.edges)) return false;
  return detail::all_distinct(std::vector<VertexId>(w.vertices.begin(), w.vertices.end() - 1));
}

enum class LinkKind { path, turnaround };

/// A path (weight 1), or a turnaround: two vertex-disjoint nontrivial pieces,
/// one at the source side and one at the target side (weight 2). In the set
/// version the pieces are X-X and Y-Y paths; in the terminal version they are
/// almost paths at s and at t.
struct Link {
  LinkKind kind = LinkKind::path;
  Walk source_part;
  Walk target_part;

  static Link path(Walk w) { return {LinkKind::path, std::move(w), {}}; }
  static Link turnaround(Walk source, Walk target) {
    return {LinkKind::turnaround, std::move(source), std::move(target)};
  }

  int weight() const noexcept { return kind == LinkKind::turnaround ? 2 : 1; }

  std::vector<VertexId> vertex_set() const {
    std::set<VertexId> out(source_part.vertices.begin(), source_part.vertices.end());
    out.insert(target_part.vertices.begin(), target_part.vertices.end());
    return {out.begin(), out.end()};
  }

  std::vector<EdgeId> edge_set() const {
    std::vector<EdgeId> out = source_part.edges;
    out.insert(out.end(), target_part.edges.begin(), target_part.edges.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const Link&, const Link&) = default;
};

enum class LinkClass { path, turnaround, not_a_link };

struct LinkVerdict {
  LinkClass verdict = LinkClass::not_a_link;
  std::string reason;
};

namespace detail {

// A turnaround piece for `side`: a nontrivial path with both ends in the set,
// or an almost path based at a vertex of the set.
inline bool is_piece(const BidirectedGraph& g, const Walk& w, const VertexSet& side) {
  if (w.trivial()) return false;
  if (w.closed()) return is_almost_path(g, w) && contains(side, w.front());
  return is_path(g, w) && contains(side, w.front()) && contains(side, w.back());
}

}  // namespace detail

inline LinkVerdict classify_link(const BidirectedGraph& g, const Link& candidate, const VertexSet& X,
                                 const VertexSet& Y) {
  if (candidate.kind == LinkKind::path) {
    const Walk& w = candidate.source_part;
    if (!candidate.target_part.vertices.empty()) return {LinkClass::not_a_link, "path with a second part"};
    if (!is_path(g, w)) return {LinkClass::not_a_link, "not a path"};
    const bool forward = detail::contains(X, w.front()) && detail::contains(Y, w.back());
    const bool backward = detail::contains(Y, w.front()) && detail::contains(X, w.back());
    if (!forward && !backward) return {LinkClass::not_a_link, "endpoints not in X and Y"};
    return {LinkClass::path, {}};
  }
  if (!detail::is_piece(g, candidate.source_part, X))
    return {LinkClass::not_a_link, "source part is not a nontrivial X-X path or almost path"};
  if (!detail::is_piece(g, candidate.target_part, Y))
    return {LinkClass::not_a_link, "target part is not a nontrivial Y-Y path or almost path"};
  if (!detail::disjoint(candidate.source_part.vertices, candidate.target_part.vertices))
    return {LinkClass::not_a_link, "parts share a vertex"};
  return {LinkClass::turnaround, {}};
}

/// Pairwise vertex-disjoint.
inline bool links_disjoint(const std::vector<Link>& links) {
  std::vector<VertexId> all;
  for (const auto& l : links) {
    auto vs = l.vertex_set();
    all.insert(all.end(), vs.begin(), vs.end());
  }
  return detail::all_distinct(all);
}

/// Pairwise vertex-disjoint apart from s and t.
inline bool links_internally_disjoint(const std::vector<Link>& links, const VertexId& s,
                                      const VertexId& t) {
  std::vector<VertexId> all;
  for (const auto& l : links)
    for (const auto& v : l.vertex_set())
      if (v != s && v != t) all.push_back(v);
  return detail::all_distinct(all);
}

namespace detail {

// Depth-first path search in position space; the DFS state is the current
// vertex plus the sign with which the last edge arrived there.
class PathSearch {
 public:
  explicit PathSearch(const BidirectedGraph& g) : g_(g), on_path_(g.num_vertices(), 0) {}

  // Calls visit(vertices, edges) for every path that starts at `start`,
  // including the trivial one.
  template <class Visit>
  void paths_from(std::size_t start, Visit&& visit) {
    vs_.assign(1, start);
    es_.clear();
    on_path_[start] = 1;
    extend_path(std::nullopt, visit);
    on_path_[start] = 0;
  }

  // Calls visit(vertices, edges) for every closed trail at `start` with at
  // least two edges and no other repeated vertex. Each is reported in both
  // directions; `vertices` ends with `start` again.
  template <class Visit>
  void almost_paths_at(std::size_t start, Visit&& visit) {
    vs_.assign(1, start);
    es_.clear();
    on_path_[start] = 1;
    extend_closed(start, std::nullopt, visit);
    on_path_[start] = 0;
  }

 private:
  template <class Visit>
  void extend_path(std::optional<Sign> arrived, Visit& visit) {
    visit(static_cast<const std::vector<std::size_t>&>(vs_), static_cast<const std::vector<std::size_t>&>(es_));
    const std::size_t cur = vs_.back();
    for (const Incidence& inc : g_.incidences(cur)) {
      if (arrived && inc.here == *arrived) continue;
      if (on_path_[inc.other]) continue;
      step(inc);
      extend_path(inc.there, visit);
      unstep(inc);
    }
  }

  template <class Visit>
  void extend_closed(std::size_t start, std::optional<Sign> arrived, Visit& visit) {
    const std::size_t cur = vs_.back();
    for (const Incidence& inc : g_.incidences(cur)) {
      if (arrived && inc.here == *arrived) continue;
      if (inc.other == start) {
        if (es_.empty() || inc.edge == es_.front()) continue;
        vs_.push_back(start);
        es_.push_back(inc.edge);
        visit(static_cast<const std::vector<std::size_t>&>(vs_), static_cast<const std::vector<std::size_t>&>(es_));
        vs_.pop_back();
        es_.pop_back();
        continue;
      }
      if (on_path_[inc.other]) continue;
      step(inc);
      extend_closed(start, inc.there, visit);
      unstep(inc);
    }
  }

  void step(const Incidence& inc) {
    on_path_[inc.other] = 1;
    vs_.push_back(inc.other);
    es_.push_back(inc.edge);
  }
  void unstep(const Incidence& inc) {
    on_path_[inc.other] = 0;
    vs_.pop_back();
    es_.pop_back();
  }

  const BidirectedGraph& g_;
  std::vector<char> on_path_;
  std::vector<std::size_t> vs_;
  std::vector<std::size_t> es_;
};

inline std::vector<char> membership(const BidirectedGraph& g, const VertexSet& set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (const auto& v : set) in[g.index_of(v)] = 1;
  return in;
}

// Every A-B path once. A path whose reversal is also an A-B path is reported
// only in the orientation whose first vertex has the smaller position.
template <class Visit>
void for_each_path(const BidirectedGraph& g, const std::vector<char>& in_a,
                   const std::vector<char>& in_b, Visit&& visit) {
  PathSearch search(g);
  for (std::size_t a = 0; a < g.num_vertices(); ++a) {
    if (!in_a[a]) continue;
    search.paths_from(a, [&](const std::vector<std::size_t>& vs, const std::vector<std::size_t>& es) {
      const std::size_t last = vs.back();
      if (!in_b[last]) return;
      const bool reversible = in_b[vs.front()] && in_a[last];
      if (reversible && vs.size() > 1 && vs.front() > last) return;
      visit(vs, es);
    });
  }
}

// Every almost path at v once, oriented so that its first edge has the
// smaller position.
template <class Visit>
void for_each_almost_path(const BidirectedGraph& g, std::size_t v, Visit&& visit) {
  PathSearch search(g);
  search.almost_paths_at(v, [&](const std::vector<std::size_t>& vs, const std::vector<std::size_t>& es) {
    if (es.front() > es.back()) return;
    visit(vs, es);
  });
}

inline Walk to_walk(const BidirectedGraph& g, const std::vector<std::size_t>& vs,
                    const std::vector<std::size_t>& es) {
  Walk w;
  w.vertices.reserve(vs.size());
  for (auto p : vs) w.vertices.push_back(g.vertices()[p]);
  w.edges.reserve(es.size());
  for (auto p : es) w.edges.push_back(g.edges()[p].id);
  return w;
}

}  // namespace detail

/// All paths with first vertex in A and last in B, trivial ones included.
inline std::vector<Walk> enumerate_paths(const BidirectedGraph& g, const VertexSet& A, const VertexSet& B) {
  std::vector<Walk> out;
  detail::for_each_path(g, detail::membership(g, A), detail::membership(g, B),
                        [&](const auto& vs, const auto& es) { out.push_back(detail::to_walk(g, vs, es)); });
  return out;
}

inline std::vector<Walk> enumerate_nontrivial_paths(const BidirectedGraph& g, const VertexSet& A,
                                                    const VertexSet& B) {
  std::vector<Walk> out;
  detail::for_each_path(g, detail::membership(g, A), detail::membership(g, B), [&](const auto& vs, const auto& es) {
    if (!es.empty()) out.push_back(detail::to_walk(g, vs, es));
  });
  return out;
}

inline std::vector<Walk> enumerate_almost_paths(const BidirectedGraph& g, const VertexId& v) {
  std::vector<Walk> out;
  detail::for_each_almost_path(g, g.index_of(v),
                               [&](const auto& vs, const auto& es) { out.push_back(detail::to_walk(g, vs, es)); });
  return out;
}

/// X-Y paths first, then every vertex-disjoint pairing of a nontrivial X-X
/// path with a nontrivial Y-Y path.
inline std::vector<Link> enumerate_xy_links(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y) {
  std::vector<Link> out;
  for (auto& w : enumerate_paths(g, X, Y)) out.push_back(Link::path(std::move(w)));
  const auto xx = enumerate_nontrivial_paths(g, X, X);
  const auto yy = enumerate_nontrivial_paths(g, Y, Y);
  for (const auto& px : xx)
    for (const auto& py : yy)
      if (detail::disjoint(px.vertices, py.vertices)) out.push_back(Link::turnaround(px, py));
  return out;
}

/// s-t paths first, then every vertex-disjoint pairing of an almost path at s
/// with an almost path at t.
inline std::vector<Link> enumerate_st_links(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  std::vector<Link> out;
  for (auto& w : enumerate_paths(g, {s}, {t})) out.push_back(Link::path(std::move(w)));
  const auto ss = enumerate_almost_paths(g, s);
  const auto tt = enumerate_almost_paths(g, t);
  for (const auto& a : ss)
    for (const auto& b : tt)
      if (detail::disjoint(a.vertices, b.vertices)) out.push_back(Link::turnaround(a, b));
  return out;
}

}  // namespace bimenger
