#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bimenger/bigraph.hpp"
#include "bimenger/error.hpp"

namespace bimenger {

struct InstanceFile {
  BidirectedGraph graph;
  VertexSet X;
  VertexSet Y;
  std::optional<VertexId> s;
  std::optional<VertexId> t;

  friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

namespace detail {

[[noreturn]] inline void syntax(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::syntax_error, "line " + std::to_string(line) + ": " + what);
}

inline Sign parse_sign(char c, std::size_t line) {
  if (c == '+') return Sign::plus;
  if (c == '-') return Sign::minus;
  syntax(line, std::string("bad sign '") + c + "'");
}

}  // namespace detail

/// Line-oriented format:
///   vertex <id>
///   edge <u> <v> <sign_u><sign_v> [<label>]
///   set X <id>...      set Y <id>...
///   terminal s <id>    terminal t <id>
/// '#' starts a comment; blank lines are ignored. Statements may come in any
/// order; repeated set members are kept once.
inline InstanceFile parse_instance(const std::string& text) {
  struct PendingEdge {
    EdgeSpec spec;
    std::size_t line;
  };
  std::vector<VertexId> vertices;
  std::set<VertexId> declared;
  std::vector<PendingEdge> edges;
  std::vector<std::pair<VertexId, std::size_t>> x_ids, y_ids;
  std::optional<std::pair<VertexId, std::size_t>> s, t;

  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream tokens(raw);
    std::vector<std::string> tok;
    for (std::string w; tokens >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "vertex") {
      if (tok.size() != 2) detail::syntax(line, "expected 'vertex <id>'");
      VertexId v(tok[1]);
      if (!declared.insert(v).second)
        throw Error(ErrorKind::duplicate_vertex_id, "line " + std::to_string(line) + ": " + tok[1]);
      vertices.push_back(v);
    } else if (kw == "edge") {
      if (tok.size() != 4 && tok.size() != 5) detail::syntax(line, "expected 'edge <u> <v> <signs> [<label>]'");
      if (tok[3].size() != 2) detail::syntax(line, "signs must be two characters from {+,-}");
      EdgeSpec spec{VertexId(tok[1]), VertexId(tok[2]), detail::parse_sign(tok[3][0], line),
                    detail::parse_sign(tok[3][1], line), tok.size() == 5 ? tok[4] : std::string()};
      edges.push_back({spec, line});
    } else if (kw == "set") {
      if (tok.size() < 2 || (tok[1] != "X" && tok[1] != "Y")) detail::syntax(line, "expected 'set X|Y <id>...'");
      auto& target = tok[1] == "X" ? x_ids : y_ids;
      for (std::size_t i = 2; i < tok.size(); ++i) target.emplace_back(VertexId(tok[i]), line);
    } else if (kw == "terminal") {
      if (tok.size() != 3 || (tok[1] != "s" && tok[1] != "t")) detail::syntax(line, "expected 'terminal s|t <id>'");
      (tok[1] == "s" ? s : t) = std::make_pair(VertexId(tok[2]), line);
    } else {
      detail::syntax(line, "unknown statement '" + kw + "'");
    }
  }

  auto known = [&](const VertexId& v, std::size_t at) {
    if (!declared.count(v)) throw Error(ErrorKind::unknown_vertex, "line " + std::to_string(at) + ": " + v.str());
  };
  std::vector<EdgeSpec> specs;
  for (const auto& pe : edges) {
    known(pe.spec.u, pe.line);
    known(pe.spec.v, pe.line);
    if (pe.spec.u == pe.spec.v)
      throw Error(ErrorKind::loop_rejected, "line " + std::to_string(pe.line) + ": " + pe.spec.u.str());
    specs.push_back(pe.spec);
  }
  InstanceFile out;
  out.graph = build_graph(vertices, specs);
  auto collect = [&](const auto& ids, VertexSet& into) {
    std::set<VertexId> seen;
    for (const auto& [v, at] : ids) {
      known(v, at);
      if (seen.insert(v).second) into.push_back(v);
    }
  };
  collect(x_ids, out.X);
  collect(y_ids, out.Y);
  if (s) {
    known(s->first, s->second);
    out.s = s->first;
  }
  if (t) {
    known(t->first, t->second);
    out.t = t->first;
  }
  return out;
}

inline std::string serialize_instance(const InstanceFile& inst) {
  std::ostringstream out;
  for (const auto& v : inst.graph.vertices()) out << "vertex " << v.str() << "\n";
  for (const auto& e : inst.graph.edges()) {
    out << "edge " << e.u.str() << " " << e.v.str() << " " << to_char(e.sign_u) << to_char(e.sign_v);
    if (!e.label.empty()) out << " " << e.label;
    out << "\n";
  }
  auto write_set = [&](const char* name, const VertexSet& set) {
    if (set.empty()) return;
    out << "set " << name;
    for (const auto& v : set) out << " " << v.str();
    out << "\n";
  };
  write_set("X", inst.X);
  write_set("Y", inst.Y);
  if (inst.s) out << "terminal s " << inst.s->str() << "\n";
  if (inst.t) out << "terminal t " << inst.t->str() << "\n";
  return out.str();
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of trial i in a batch; independent of the order trials run in.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return splitmix64(seed ^ splitmix64(trial));
}

/// mt19937_64 output is fixed by the standard; bounded draws use rejection
/// sampling here rather than std::uniform_int_distribution, whose output
/// differs between standard libraries.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t r;
    do r = engine_();
    while (r >= limit);
    return r % n;
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

struct GenParams {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t x_size = 1;
  std::size_t y_size = 1;
  bool overlap_allowed = false;
};

/// Vertices v0..v{n-1}; edge endpoints uniform with loops redrawn; signs
/// uniform; X then Y drawn uniformly (Y avoids X unless overlap is allowed).
inline InstanceFile random_instance(const GenParams& p) {
  if (p.m > 0 && p.n < 2) throw Error(ErrorKind::invalid_params, "edges need at least two vertices");
  if (p.x_size > p.n || p.y_size > p.n) throw Error(ErrorKind::invalid_params, "set larger than vertex count");
  if (!p.overlap_allowed && p.x_size + p.y_size > p.n)
    throw Error(ErrorKind::invalid_params, "disjoint X and Y do not fit");
  SeededRng rng(p.seed);
  std::vector<VertexId> vertices;
  for (std::size_t i = 0; i < p.n; ++i) vertices.emplace_back("v" + std::to_string(i));
  std::vector<EdgeSpec> specs;
  while (specs.size() < p.m) {
    const auto u = rng.below(p.n);
    const auto v = rng.below(p.n);
    if (u == v) continue;
    const Sign su = rng.coin() ? Sign::plus : Sign::minus;
    const Sign sv = rng.coin() ? Sign::plus : Sign::minus;
    specs.push_back({vertices[u], vertices[v], su, sv, {}});
  }
  auto draw = [&](std::vector<std::size_t> pool, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
  };
  std::vector<std::size_t> all(p.n);
  for (std::size_t i = 0; i < p.n; ++i) all[i] = i;
  const auto xs = draw(all, p.x_size);
  std::vector<std::size_t> rest;
  for (auto i : all)
    if (p.overlap_allowed || !std::binary_search(xs.begin(), xs.end(), i)) rest.push_back(i);
  const auto ys = draw(rest, p.y_size);

  InstanceFile out;
  out.graph = build_graph(vertices, specs);
  for (auto i : xs) out.X.push_back(vertices[i]);
  for (auto i : ys) out.Y.push_back(vertices[i]);
  return out;
}

}  // namespace bimenger
