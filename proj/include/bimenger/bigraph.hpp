#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimenger/error.hpp"
#include "bimenger/rational.hpp"

namespace bimenger {

enum class Sign : std::int8_t { minus = -1, plus = 1 };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::plus ? Sign::minus : Sign::plus; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }

/// Opaque vertex token. Ordering is plain string ordering.
struct VertexId {
  std::string name;

  VertexId() = default;
  explicit VertexId(std::string n) : name(std::move(n)) {}
  explicit VertexId(const char* n) : name(n) {}

  const std::string& str() const noexcept { return name; }
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  std::uint32_t value = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

using VertexSet = std::vector<VertexId>;

struct Edge {
  EdgeId id;
  VertexId u;
  VertexId v;
  Sign sign_u = Sign::plus;
  Sign sign_v = Sign::plus;
  std::string label;

  bool has_endpoint(const VertexId& w) const { return u == w || v == w; }
  Sign sign_at(const VertexId& w) const { return w == u ? sign_u : sign_v; }
  const VertexId& other(const VertexId& w) const { return w == u ? v : u; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct EdgeSpec {
  VertexId u;
  VertexId v;
  Sign sign_u = Sign::plus;
  Sign sign_v = Sign::plus;
  std::string label;
};

/// One half-edge seen from a vertex, in position space.
struct Incidence {
  std::size_t edge;   // position in edges()
  std::size_t other;  // position of the far endpoint in vertices()
  Sign here;
  Sign there;
};

/// Loop-free bidirected multigraph. Immutable once built; vertex and edge
/// order is insertion order and fixes every matrix layout derived from it.
class BidirectedGraph {
 public:
  BidirectedGraph() = default;

  /// Validates and takes ownership. Edge ids must be unique; they need not
  /// be contiguous (deletion keeps the surviving ids).
  static BidirectedGraph from_parts(std::vector<VertexId> vertices, std::vector<Edge> edges) {
    BidirectedGraph g;
    g.vertices_ = std::move(vertices);
    g.edges_ = std::move(edges);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
      if (!g.vertex_pos_.emplace(g.vertices_[i], i).second)
        throw Error(ErrorKind::duplicate_vertex_id, g.vertices_[i].str());
    }
    g.incidences_.resize(g.vertices_.size());
    for (std::size_t k = 0; k < g.edges_.size(); ++k) {
      const Edge& e = g.edges_[k];
      auto iu = g.vertex_pos_.find(e.u);
      auto iv = g.vertex_pos_.find(e.v);
      if (iu == g.vertex_pos_.end()) throw Error(ErrorKind::unknown_vertex, e.u.str());
      if (iv == g.vertex_pos_.end()) throw Error(ErrorKind::unknown_vertex, e.v.str());
      if (e.u == e.v) throw Error(ErrorKind::loop_rejected, "loop at " + e.u.str());
      if (!g.edge_pos_.emplace(e.id, k).second)
        throw Error(ErrorKind::duplicate_edge_id, std::to_string(e.id.value));
      g.incidences_[iu->second].push_back({k, iv->second, e.sign_u, e.sign_v});
      g.incidences_[iv->second].push_back({k, iu->second, e.sign_v, e.sign_u});
    }
    return g;
  }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  bool contains(const VertexId& v) const { return vertex_pos_.count(v) != 0; }
  bool contains(EdgeId e) const { return edge_pos_.count(e) != 0; }

  std::size_t index_of(const VertexId& v) const {
    auto it = vertex_pos_.find(v);
    if (it == vertex_pos_.end()) throw Error(ErrorKind::unknown_vertex, v.str());
    return it->second;
  }

  std::size_t position_of(EdgeId e) const {
    auto it = edge_pos_.find(e);
    if (it == edge_pos_.end()) throw Error(ErrorKind::unknown_edge, std::to_string(e.value));
    return it->second;
  }

  const Edge& edge(EdgeId e) const { return edges_[position_of(e)]; }

  const std::vector<Incidence>& incidences(std::size_t vertex_pos) const {
    return incidences_[vertex_pos];
  }

  /// Largest id in use plus one; fresh ids for derived graphs start here.
  std::uint32_t next_edge_id() const {
    std::uint32_t next = 0;
    for (const auto& e : edges_) next = std::max(next, e.id.value + 1);
    return next;
  }

  friend bool operator==(const BidirectedGraph& a, const BidirectedGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::size_t> vertex_pos_;
  std::map<EdgeId, std::size_t> edge_pos_;
  std::vector<std::vector<Incidence>> incidences_;
};

/// Edge ids are assigned 0, 1, 2, ... in input order.
inline BidirectedGraph build_graph(const std::vector<VertexId>& vertex_ids,
                                   const std::vector<EdgeSpec>& edge_specs) {
  std::vector<Edge> edges;
  edges.reserve(edge_specs.size());
  std::uint32_t next = 0;
  for (const auto& spec : edge_specs)
    edges.push_back({EdgeId{next++}, spec.u, spec.v, spec.sign_u, spec.sign_v, spec.label});
  return BidirectedGraph::from_parts(vertex_ids, std::move(edges));
}

struct IncidenceMatrix {
  std::vector<VertexId> row_ids;
  std::vector<EdgeId> col_ids;
  RationalMatrix entries;
};

inline IncidenceMatrix incidence_matrix(const BidirectedGraph& g) {
  IncidenceMatrix m;
  m.row_ids = g.vertices();
  m.entries = RationalMatrix(g.num_vertices(), g.num_edges(), Rational(0));
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const Edge& e = g.edges()[k];
    m.col_ids.push_back(e.id);
    m.entries(g.index_of(e.u), k) = to_int(e.sign_u);
    m.entries(g.index_of(e.v), k) = to_int(e.sign_v);
  }
  return m;
}

inline std::set<VertexId> to_set(const VertexSet& vs) { return {vs.begin(), vs.end()}; }

inline void require_vertices(const BidirectedGraph& g, const VertexSet& vs) {
  for (const auto& v : vs)
    if (!g.contains(v)) throw Error(ErrorKind::unknown_vertex, v.str());
}

/// Removes `drop` and every incident edge; surviving vertex and edge ids are kept.
inline BidirectedGraph delete_vertices(const BidirectedGraph& g, const VertexSet& drop) {
  require_vertices(g, drop);
  const auto gone = to_set(drop);
  std::vector<VertexId> vertices;
  for (const auto& v : g.vertices())
    if (!gone.count(v)) vertices.push_back(v);
  std::vector<Edge> edges;
  for (const auto& e : g.edges())
    if (!gone.count(e.u) && !gone.count(e.v)) edges.push_back(e);
  return BidirectedGraph::from_parts(std::move(vertices), std::move(edges));
}

/// Flips every half-edge sign at v.
inline BidirectedGraph switch_vertex(const BidirectedGraph& g, const VertexId& v) {
  if (!g.contains(v)) throw Error(ErrorKind::unknown_vertex, v.str());
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    if (e.u == v) e.sign_u = -e.sign_u;
    if (e.v == v) e.sign_v = -e.sign_v;
  }
  return BidirectedGraph::from_parts(g.vertices(), std::move(edges));
}

/// A name not yet in `taken`, starting from `base` and appending "#k" on
/// collision. The chosen name is inserted into `taken`.
inline VertexId fresh_vertex(const std::string& base, std::set<std::string>& taken) {
  std::string name = base;
  for (int k = 1; taken.count(name); ++k) name = base + "#" + std::to_string(k);
  taken.insert(name);
  return VertexId(name);
}

}  // namespace bimenger
