#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimenger/bigraph.hpp"
#include "bimenger/walks.hpp"

namespace bimenger {

enum class ReductionKind { terminal, split, doubling };

enum class EdgeRole {
  original,  // image of a source edge
  split,     // v+ v- edge standing in for source vertex v
  gadget,    // terminal attachment edge guarding a source vertex
  closing,   // the edge f from t to s
};

struct EdgeOrigin {
  EdgeRole role = EdgeRole::original;
  std::optional<EdgeId> source_edge;
  std::optional<VertexId> source_vertex;  // split vertex or guarded vertex
  std::pair<VertexId, VertexId> source_endpoints;  // set for original edges
};

/// Edges added around one guarded vertex x: hub - terminal, and two parallel
/// hub - x edges with sign + and sign - at x.
struct Gadget {
  VertexId hub;
  EdgeId terminal_edge;
  EdgeId plus_edge;
  EdgeId minus_edge;
};

/// Bookkeeping that ties a derived graph back to the graph it came from.
struct ReductionMap {
  ReductionKind kind = ReductionKind::terminal;
  std::map<VertexId, VertexSet> vertex_map;    // source -> derived images
  std::map<VertexId, VertexId> vertex_origin;  // derived -> source; absent for added terminals
  std::map<EdgeId, EdgeId> edge_map;           // source -> derived
  std::map<EdgeId, EdgeOrigin> edge_origin;    // derived -> role and source

  std::optional<VertexId> s;  // terminals of the derived graph
  std::optional<VertexId> t;
  std::optional<EdgeId> f;

  std::map<VertexId, Gadget> source_gadgets;  // terminal: per x in X
  std::map<VertexId, Gadget> target_gadgets;  // terminal: per y in Y
  std::map<VertexId, EdgeId> split_edges;     // split: per source vertex
  VertexSet copy_one;                         // doubling: images of the first copy
};

using MapChain = std::vector<ReductionMap>;

struct TerminalAttachment {
  BidirectedGraph graph;
  VertexId s;
  VertexId t;
  ReductionMap map;
};

namespace detail {

inline std::set<std::string> names_of(const BidirectedGraph& g) {
  std::set<std::string> taken;
  for (const auto& v : g.vertices()) taken.insert(v.str());
  return taken;
}

inline EdgeOrigin original_origin(const Edge& e) {
  return {EdgeRole::original, e.id, std::nullopt, {e.u, e.v}};
}

}  // namespace detail

/// Adds terminals s and t. Every x in X gets a hub vertex joined to s by one
/// edge (- at s, + at the hub) and to x by two parallel edges (- at the hub,
/// one with each sign at x); Y is handled symmetrically with t and opposite
/// signs. All half-edges at s are - and all at t are +.
inline TerminalAttachment attach_terminals(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y) {
  require_vertices(g, X);
  require_vertices(g, Y);
  auto taken = detail::names_of(g);
  TerminalAttachment out;
  ReductionMap& map = out.map;
  map.kind = ReductionKind::terminal;
  out.s = fresh_vertex("s", taken);
  out.t = fresh_vertex("t", taken);
  map.s = out.s;
  map.t = out.t;

  std::vector<VertexId> vertices{out.s};
  std::vector<Edge> edges;
  for (const auto& v : g.vertices()) {
    vertices.push_back(v);
    map.vertex_map[v].push_back(v);
    map.vertex_origin[v] = v;
  }
  for (const auto& e : g.edges()) {
    edges.push_back(e);
    map.edge_map[e.id] = e.id;
    map.edge_origin[e.id] = detail::original_origin(e);
  }

  std::uint32_t next = g.next_edge_id();
  auto add_gadget = [&](const VertexId& x, const VertexId& terminal, Sign at_terminal, const std::string& prefix) {
    const VertexId hub = fresh_vertex(prefix + x.str(), taken);
    vertices.push_back(hub);
    map.vertex_map[x].push_back(hub);
    map.vertex_origin[hub] = x;
    // The hub must alternate between its terminal edge and its x edges.
    const Sign hub_to_terminal = -at_terminal;
    const Sign hub_to_x = at_terminal;
    Gadget gadget{hub, EdgeId{next}, EdgeId{next + 1}, EdgeId{next + 2}};
    edges.push_back({gadget.terminal_edge, terminal, hub, at_terminal, hub_to_terminal, {}});
    edges.push_back({gadget.plus_edge, hub, x, hub_to_x, Sign::plus, {}});
    edges.push_back({gadget.minus_edge, hub, x, hub_to_x, Sign::minus, {}});
    for (EdgeId id : {gadget.terminal_edge, gadget.plus_edge, gadget.minus_edge})
      map.edge_origin[id] = {EdgeRole::gadget, std::nullopt, x, {}};
    next += 3;
    return gadget;
  };
  for (const auto& x : X)
    if (!map.source_gadgets.count(x)) map.source_gadgets[x] = add_gadget(x, out.s, Sign::minus, "X:");
  for (const auto& y : Y)
    if (!map.target_gadgets.count(y)) map.target_gadgets[y] = add_gadget(y, out.t, Sign::plus, "Y:");
  vertices.push_back(out.t);

  out.graph = BidirectedGraph::from_parts(std::move(vertices), std::move(edges));
  return out;
}

/// Sets every half-edge at s to - and every half-edge at t to +.
inline BidirectedGraph normalize_terminals(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  if (s == t) throw Error(ErrorKind::equal_terminals, s.str());
  if (!g.contains(s)) throw Error(ErrorKind::unknown_vertex, s.str());
  if (!g.contains(t)) throw Error(ErrorKind::unknown_vertex, t.str());
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) {
    if (e.u == s) e.sign_u = Sign::minus;
    if (e.v == s) e.sign_v = Sign::minus;
    if (e.u == t) e.sign_u = Sign::plus;
    if (e.v == t) e.sign_v = Sign::plus;
  }
  return BidirectedGraph::from_parts(g.vertices(), std::move(edges));
}

inline bool is_normalized(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  for (const auto& e : g.edges()) {
    if (e.has_endpoint(s) && e.sign_at(s) != Sign::minus) return false;
    if (e.has_endpoint(t) && e.sign_at(t) != Sign::plus) return false;
  }
  return true;
}

inline bool has_direct_edge(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  return std::any_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return e.has_endpoint(s) && e.has_endpoint(t); });
}

struct SplitGraph {
  BidirectedGraph graph;
  EdgeId f;
  ReductionMap map;
};

/// Replaces every v other than s, t by v+ (its +-ends) and v- (its -ends)
/// joined by an edge with - at v+ and + at v-, then adds f with + at s and
/// - at t. f is the last edge.
inline SplitGraph split_and_close(const BidirectedGraph& g, const VertexId& s, const VertexId& t) {
  if (s == t) throw Error(ErrorKind::equal_terminals, s.str());
  if (!g.contains(s)) throw Error(ErrorKind::unknown_vertex, s.str());
  if (!g.contains(t)) throw Error(ErrorKind::unknown_vertex, t.str());
  if (!is_normalized(g, s, t)) throw Error(ErrorKind::not_normalized, "terminal half-edges are not normalized");
  if (has_direct_edge(g, s, t)) throw Error(ErrorKind::direct_terminal_edge, s.str() + "-" + t.str());

  SplitGraph out;
  ReductionMap& map = out.map;
  map.kind = ReductionKind::split;
  map.s = s;
  map.t = t;
  auto taken = detail::names_of(g);

  std::vector<VertexId> vertices;
  std::map<VertexId, std::pair<VertexId, VertexId>> halves;  // v -> (v+, v-)
  for (const auto& v : g.vertices()) {
    if (v == s || v == t) {
      vertices.push_back(v);
      map.vertex_map[v].push_back(v);
      map.vertex_origin[v] = v;
      continue;
    }
    VertexId plus = fresh_vertex(v.str() + "+", taken);
    VertexId minus = fresh_vertex(v.str() + "-", taken);
    vertices.push_back(plus);
    vertices.push_back(minus);
    map.vertex_map[v] = {plus, minus};
    map.vertex_origin[plus] = v;
    map.vertex_origin[minus] = v;
    halves.emplace(v, std::make_pair(plus, minus));
  }
  auto end_for = [&](const VertexId& w, Sign sign) {
    if (w == s || w == t) return w;
    const auto& h = halves.at(w);
    return sign == Sign::plus ? h.first : h.second;
  };

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    edges.push_back({e.id, end_for(e.u, e.sign_u), end_for(e.v, e.sign_v), e.sign_u, e.sign_v, e.label});
    map.edge_map[e.id] = e.id;
    map.edge_origin[e.id] = detail::original_origin(e);
  }
  std::uint32_t next = g.next_edge_id();
  for (const auto& v : g.vertices()) {
    if (v == s || v == t) continue;
    const auto& h = halves.at(v);
    const EdgeId id{next++};
    edges.push_back({id, h.first, h.second, Sign::minus, Sign::plus, {}});
    map.split_edges[v] = id;
    map.edge_origin[id] = {EdgeRole::split, std::nullopt, v, {}};
  }
  out.f = EdgeId{next++};
  edges.push_back({out.f, s, t, Sign::plus, Sign::minus, "f"});
  map.f = out.f;
  map.edge_origin[out.f] = {EdgeRole::closing, std::nullopt, std::nullopt, {}};

  out.graph = BidirectedGraph::from_parts(std::move(vertices), std::move(edges));
  return out;
}

struct DoubledGraph {
  BidirectedGraph graph;
  VertexSet X1;
  VertexSet X2;
  ReductionMap map;
};

/// Two disjoint relabelled copies of g; X1 and X2 are the images of X.
inline DoubledGraph double_for_xpaths(const BidirectedGraph& g, const VertexSet& X) {
  require_vertices(g, X);
  DoubledGraph out;
  ReductionMap& map = out.map;
  map.kind = ReductionKind::doubling;
  std::set<std::string> taken;
  std::vector<VertexId> vertices;
  std::map<VertexId, VertexId> first, second;
  for (const auto& v : g.vertices()) {
    first[v] = fresh_vertex(v.str() + "'", taken);
    vertices.push_back(first[v]);
  }
  for (const auto& v : g.vertices()) {
    second[v] = fresh_vertex(v.str() + "''", taken);
    vertices.push_back(second[v]);
  }
  for (const auto& v : g.vertices()) {
    map.vertex_map[v] = {first[v], second[v]};
    map.vertex_origin[first[v]] = v;
    map.vertex_origin[second[v]] = v;
    map.copy_one.push_back(first[v]);
  }
  std::vector<Edge> edges;
  const std::uint32_t shift = g.next_edge_id();
  for (const auto& e : g.edges()) {
    edges.push_back({e.id, first[e.u], first[e.v], e.sign_u, e.sign_v, e.label});
    map.edge_map[e.id] = e.id;
    map.edge_origin[e.id] = detail::original_origin(e);
  }
  for (const auto& e : g.edges()) {
    const EdgeId id{e.id.value + shift};
    edges.push_back({id, second[e.u], second[e.v], e.sign_u, e.sign_v, e.label});
    map.edge_origin[id] = detail::original_origin(e);
  }
  for (const auto& x : X) {
    out.X1.push_back(first[x]);
    out.X2.push_back(second[x]);
  }
  out.graph = BidirectedGraph::from_parts(std::move(vertices), std::move(edges));
  return out;
}

namespace detail {

[[noreturn]] inline void bad_link(const std::string& why) { throw Error(ErrorKind::invalid_derived_link, why); }

inline const EdgeOrigin& origin_of(const ReductionMap& map, EdgeId e) {
  auto it = map.edge_origin.find(e);
  if (it == map.edge_origin.end()) bad_link("edge " + std::to_string(e.value) + " is not in the derived graph");
  return it->second;
}

inline const VertexId& vertex_source(const ReductionMap& map, const VertexId& v) {
  auto it = map.vertex_origin.find(v);
  if (it == map.vertex_origin.end()) bad_link("vertex " + v.str() + " has no source vertex");
  return it->second;
}

// Collapses v+ / v- pairs and drops split edges.
inline Walk unsplit_walk(const ReductionMap& map, const Walk& w) {
  Walk out;
  out.vertices.push_back(vertex_source(map, w.vertices.front()));
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    const EdgeOrigin& o = origin_of(map, w.edges[i]);
    const VertexId& next = vertex_source(map, w.vertices[i + 1]);
    switch (o.role) {
      case EdgeRole::split:
        if (next != out.vertices.back()) bad_link("split edge between different vertices");
        break;
      case EdgeRole::original:
        out.edges.push_back(*o.source_edge);
        out.vertices.push_back(next);
        break;
      default:
        bad_link("closing or gadget edge inside a split-graph link");
    }
  }
  return out;
}

// s, hub, x, ..., y, hub, t  ->  x, ..., y  (and the closed variants at s or t).
inline Walk strip_gadgets(const ReductionMap& map, Walk w) {
  if (w.vertices.size() < 5) bad_link("walk too short to pass through terminal gadgets");
  const bool from_terminal = (w.front() == *map.s || w.front() == *map.t);
  if (!from_terminal) bad_link("walk does not start at a terminal");
  for (std::size_t i : {std::size_t{0}, std::size_t{1}, w.edges.size() - 2, w.edges.size() - 1})
    if (origin_of(map, w.edges[i]).role != EdgeRole::gadget) bad_link("expected a gadget edge at the walk ends");
  Walk out;
  for (std::size_t i = 2; i + 2 < w.vertices.size(); ++i) out.vertices.push_back(vertex_source(map, w.vertices[i]));
  for (std::size_t i = 2; i + 2 < w.edges.size(); ++i) {
    const EdgeOrigin& o = origin_of(map, w.edges[i]);
    if (o.role != EdgeRole::original) bad_link("gadget edge inside a link");
    out.edges.push_back(*o.source_edge);
  }
  if (vertex_source(map, w.vertices[1]) != out.front() || vertex_source(map, w.vertices[w.vertices.size() - 2]) != out.back())
    bad_link("gadget hub does not guard the adjacent vertex");
  return out;
}

inline Walk undouble_walk(const ReductionMap& map, const Walk& w) {
  Walk out;
  for (const auto& v : w.vertices) out.vertices.push_back(vertex_source(map, v));
  for (const auto& e : w.edges) {
    const EdgeOrigin& o = origin_of(map, e);
    if (o.role != EdgeRole::original) bad_link("unexpected edge role in doubled graph");
    out.edges.push_back(*o.source_edge);
  }
  return out;
}

inline Link map_link_back(const ReductionMap& map, const Link& link) {
  auto apply = [&](const Walk& w) -> Walk {
    switch (map.kind) {
      case ReductionKind::split: return unsplit_walk(map, w);
      case ReductionKind::doubling: return undouble_walk(map, w);
      case ReductionKind::terminal: {
        Walk oriented = w;
        if (oriented.front() == *map.t && oriented.back() == *map.s) oriented = oriented.reversed();
        return strip_gadgets(map, oriented);
      }
    }
    bad_link("unknown reduction");
  };
  if (link.kind == LinkKind::path) return Link::path(apply(link.source_part));
  return Link::turnaround(apply(link.source_part), apply(link.target_part));
}

}  // namespace detail

/// Maps links of the most derived graph of `chain` back to the original.
/// The chain is ordered from the original graph outwards.
inline std::vector<Link> map_links_back(const MapChain& chain, const std::vector<Link>& links) {
  std::vector<Link> out = links;
  for (auto it = chain.rbegin(); it != chain.rend(); ++it)
    for (auto& l : out) l = detail::map_link_back(*it, l);
  return out;
}

/// Maps a cut of the most derived graph to original vertices: a split edge to
/// its vertex, a gadget edge to the vertex it guards, an original edge to its
/// least endpoint that is not a terminal.
inline VertexSet map_cut_to_separator(const MapChain& chain, const std::vector<EdgeId>& cut) {
  if (chain.empty()) throw Error(ErrorKind::unmappable_edge, "empty reduction chain");
  const ReductionMap& last = chain.back();
  std::set<VertexId> current;
  for (EdgeId e : cut) {
    auto it = last.edge_origin.find(e);
    if (it == last.edge_origin.end()) throw Error(ErrorKind::unmappable_edge, "unknown edge " + std::to_string(e.value));
    const EdgeOrigin& o = it->second;
    switch (o.role) {
      case EdgeRole::split:
      case EdgeRole::gadget:
        current.insert(*o.source_vertex);
        break;
      case EdgeRole::original: {
        std::vector<VertexId> ends;
        for (const VertexId& w : {o.source_endpoints.first, o.source_endpoints.second})
          if (!(last.kind == ReductionKind::split && (w == *last.s || w == *last.t))) ends.push_back(w);
        if (ends.empty()) throw Error(ErrorKind::unmappable_edge, "edge joins the terminals directly");
        current.insert(*std::min_element(ends.begin(), ends.end()));
        break;
      }
      case EdgeRole::closing:
        throw Error(ErrorKind::unmappable_edge, "the closing edge cannot be cut");
    }
  }
  for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) {
    std::set<VertexId> next;
    for (const auto& v : current) {
      auto o = it->vertex_origin.find(v);
      if (o == it->vertex_origin.end()) throw Error(ErrorKind::unmappable_edge, "terminal " + v.str() + " in cut");
      next.insert(o->second);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

namespace detail {

inline const Gadget& gadget_for(const std::map<VertexId, Gadget>& gadgets, const VertexId& v) {
  auto it = gadgets.find(v);
  if (it == gadgets.end()) throw Error(ErrorKind::invalid_derived_link, v.str() + " has no terminal gadget");
  return it->second;
}

// Gadget edge into x whose sign at x is `at_x`.
inline EdgeId gadget_edge(const Gadget& gadget, Sign at_x) {
  return at_x == Sign::plus ? gadget.plus_edge : gadget.minus_edge;
}

// Sign at walk vertex `index` of the edge leaving it toward `index + step`.
inline Sign end_sign(const BidirectedGraph& g, const Walk& w, std::size_t edge_index, const VertexId& at) {
  return g.edge(w.edges[edge_index]).sign_at(at);
}

inline Walk lift_through_gadgets(const BidirectedGraph& source, const ReductionMap& map, const Walk& w,
                                 const std::map<VertexId, Gadget>& front_side, const VertexId& front_terminal,
                                 const std::map<VertexId, Gadget>& back_side, const VertexId& back_terminal) {
  const Gadget& gf = gadget_for(front_side, w.front());
  const Gadget& gb = gadget_for(back_side, w.back());
  // The gadget edge at an end must have the sign opposite to the walk's own
  // edge there; a trivial walk uses + in front and - at the back.
  const Sign front_sign = w.trivial() ? Sign::plus : -end_sign(source, w, 0, w.front());
  const Sign back_sign = w.trivial() ? Sign::minus : -end_sign(source, w, w.edges.size() - 1, w.back());
  Walk out;
  out.vertices = {front_terminal, gf.hub};
  out.edges = {gf.terminal_edge, gadget_edge(gf, front_sign)};
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    out.vertices.push_back(w.vertices[i]);
    if (i < w.edges.size()) out.edges.push_back(map.edge_map.at(w.edges[i]));
  }
  out.edges.push_back(gadget_edge(gb, back_sign));
  out.edges.push_back(gb.terminal_edge);
  out.vertices.push_back(gb.hub);
  out.vertices.push_back(back_terminal);
  return out;
}

inline Walk lift_through_split(const BidirectedGraph& source, const ReductionMap& map, const Walk& w) {
  Walk out;
  auto half = [&](const VertexId& v, Sign sign) {
    const auto& images = map.vertex_map.at(v);
    return images.size() == 1 ? images[0] : images[sign == Sign::plus ? 0 : 1];
  };
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    const VertexId& v = w.vertices[i];
    const bool terminal = (v == *map.s || v == *map.t);
    if (!terminal && (i == 0 || i + 1 == w.vertices.size()))
      throw Error(ErrorKind::invalid_derived_link, "only s-t links can be lifted through the split");
    if (terminal) {
      out.vertices.push_back(v);
    } else {
      const Sign in = source.edge(w.edges[i - 1]).sign_at(v);
      const Sign leave = source.edge(w.edges[i]).sign_at(v);
      out.vertices.push_back(half(v, in));
      out.edges.push_back(map.split_edges.at(v));
      out.vertices.push_back(half(v, leave));
    }
    if (i < w.edges.size()) out.edges.push_back(map.edge_map.at(w.edges[i]));
  }
  return out;
}

}  // namespace detail

/// Forward image of a source link in the derived graph (terminal and split
/// reductions). map_links_back undoes it.
inline Link lift_link(const BidirectedGraph& source, const ReductionMap& map, const Link& link) {
  switch (map.kind) {
    case ReductionKind::terminal:
      if (link.kind == LinkKind::path) {
        Walk w = link.source_part;
        if (!map.source_gadgets.count(w.front()) || !map.target_gadgets.count(w.back())) w = w.reversed();
        return Link::path(detail::lift_through_gadgets(source, map, w, map.source_gadgets, *map.s,
                                                       map.target_gadgets, *map.t));
      }
      return Link::turnaround(
          detail::lift_through_gadgets(source, map, link.source_part, map.source_gadgets, *map.s, map.source_gadgets, *map.s),
          detail::lift_through_gadgets(source, map, link.target_part, map.target_gadgets, *map.t, map.target_gadgets, *map.t));
    case ReductionKind::split:
      if (link.kind == LinkKind::path) return Link::path(detail::lift_through_split(source, map, link.source_part));
      return Link::turnaround(detail::lift_through_split(source, map, link.source_part),
                              detail::lift_through_split(source, map, link.target_part));
    case ReductionKind::doubling:
      break;
  }
  throw Error(ErrorKind::invalid_derived_link, "lifting through the doubling is not defined");
}

}  // namespace bimenger
