#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bimenger/certify.hpp"
#include "bimenger/fixtures.hpp"
#include "bimenger/instance_io.hpp"
#include "bimenger/oracle.hpp"
#include "bimenger/regularity.hpp"

namespace bimenger::selfcheck {

struct Config {
  std::size_t trials = 200;  // instances for the oracle-equivalence family
  std::uint64_t seed = 7;
  std::size_t max_vertices = 7;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

namespace detail {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  std::string summary() const {
    std::string out = std::to_string(checked - failed) + "/" + std::to_string(checked) + " passed";
    if (failed) out += "; first failure: " + first_failure;
    return out;
  }
};

// Stream-specific seeds so the criteria draw independent instance families.
inline std::uint64_t stream_seed(const Config& c, std::uint64_t stream, std::uint64_t i) {
  return trial_seed(c.seed ^ (stream * 0x9e3779b97f4a7c15ULL), i);
}

inline GenParams link_params(const Config& c, std::uint64_t i) {
  const std::uint64_t seed = stream_seed(c, 3, i);
  SeededRng rng(seed ^ 0x5bd1e995ULL);
  GenParams p;
  p.seed = seed;
  p.n = 2 + rng.below(std::max<std::size_t>(c.max_vertices, 2) - 1);
  p.m = rng.below(15);
  p.x_size = 1 + rng.below(std::min<std::size_t>(3, p.n - 1));
  p.overlap_allowed = rng.coin();
  const std::size_t room = p.overlap_allowed ? p.n : p.n - p.x_size;
  p.y_size = 1 + rng.below(std::min<std::size_t>(3, room));
  return p;
}

inline std::string label(const GenParams& p) {
  return "n=" + std::to_string(p.n) + " m=" + std::to_string(p.m) + " seed=" + std::to_string(p.seed);
}

// The unmodified attachment: an edge x-s with each sign at x and - at s for
// every x in X, and likewise y-t with + at t. Kept only as the witness for
// why the library attaches terminals through hub vertices instead.
inline std::pair<BidirectedGraph, std::pair<VertexId, VertexId>> unmodified_attachment(const BidirectedGraph& g,
                                                                                       const VertexSet& X,
                                                                                       const VertexSet& Y) {
  std::set<std::string> taken;
  for (const auto& v : g.vertices()) taken.insert(v.str());
  const VertexId s = fresh_vertex("s", taken);
  const VertexId t = fresh_vertex("t", taken);
  std::vector<VertexId> vertices = g.vertices();
  vertices.push_back(s);
  vertices.push_back(t);
  std::vector<EdgeSpec> specs;
  for (const auto& e : g.edges()) specs.push_back({e.u, e.v, e.sign_u, e.sign_v, e.label});
  for (const auto& x : X)
    for (Sign a : {Sign::plus, Sign::minus}) specs.push_back({x, s, a, Sign::minus, {}});
  for (const auto& y : Y)
    for (Sign a : {Sign::plus, Sign::minus}) specs.push_back({y, t, a, Sign::plus, {}});
  return {build_graph(vertices, specs), {s, t}};
}

// Whether x is a vertex of {A x = b, lower <= x <= upper}: the equality rows
// together with the unit rows of variables at a bound have full column rank.
inline bool is_vertex(const LpProblem& p, const std::vector<Rational>& x) {
  if (!satisfies(p, x)) return false;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t r = 0; r < p.num_rows(); ++r) {
    auto row = p.a_eq.row(r);
    rows.emplace_back(row.begin(), row.end());
  }
  for (std::size_t c = 0; c < p.num_vars(); ++c)
    if (x[c] == p.lower[c] || (p.upper[c] && x[c] == *p.upper[c])) {
      rows.emplace_back(p.num_vars(), Rational(0));
      rows.back()[c] = 1;
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < p.num_vars() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][c]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < p.num_vars(); ++k) rows[r][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank == p.num_vars();
}

// One solved instance of the oracle-equivalence family, shared by the
// criteria that reuse it.
struct Solved {
  GenParams params;
  InstanceFile instance;
  MengerCertificate cert;
  PackingResult oracle_max;
  SeparatorResult oracle_min;
  bool separator_clean = false;
  std::string error;
};

inline std::vector<Solved> solve_family(const Config& c) {
  std::vector<Solved> out(c.trials);
  for (std::size_t i = 0; i < c.trials; ++i) {
    Solved& s = out[i];
    s.params = link_params(c, i);
    try {
      s.instance = random_instance(s.params);
      const auto& g = s.instance.graph;
      s.cert = solve_menger(g, s.instance.X, s.instance.Y);
      s.oracle_max = oracle_max_links(g, s.instance.X, s.instance.Y);
      s.oracle_min = oracle_min_separator(g, s.instance.X, s.instance.Y);
      const auto& sep = s.cert.separator;
      s.separator_clean = !has_xy_link(delete_vertices(g, sep), bimenger::detail::minus(s.instance.X, sep),
                                       bimenger::detail::minus(s.instance.Y, sep));
    } catch (const std::exception& e) {
      s.error = e.what();
    }
  }
  return out;
}

}  // namespace detail

class Runner {
 public:
  explicit Runner(Config config) : config_(config) {}

  static constexpr int num_criteria = 9;

  std::vector<CriterionResult> run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= num_criteria; ++id) out.push_back(run_one(id));
    return out;
  }

  CriterionResult run_one(int id) {
    switch (id) {
      case 1: return timed(1, "figure-1a fixture: value 2, separator 2, oracle agrees", [this] { return fig1a(); });
      case 2:
        return timed(2, "figure-1b fixture: value 2, separator of size 1 clears all links", [this] { return fig1b(); });
      case 3: return timed(3, "oracle equivalence on random instances", [this] { return oracle_equivalence(); });
      case 4: return timed(4, "LP integrality of basic optima and strong duality", [this] { return lp_integrality(); });
      case 5: return timed(5, "incidence matrices are 2-regular (order <= 5)", [this] { return two_regular(); });
      case 6: return timed(6, "cut soundness and dual-sum identity", [this] { return cut_soundness(); });
      case 7: return timed(7, "no turnarounds: max paths = min separator", [this] { return no_turnaround(); });
      case 8:
        return timed(8, "X-paths: packing matches oracle, 2*packing >= min hitting set", [this] { return xpaths(); });
      case 9: return timed(9, "edgeless |X|=|Y|=1: value 0, empty separator", [this] { return gadget_witness(); });
      default: throw Error(ErrorKind::invalid_params, "no criterion " + std::to_string(id));
    }
  }

  CriterionResult fig1a() {
    const auto inst = fixtures::load(fixtures::fig1a);
    const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
    const auto om = oracle_max_links(inst.graph, inst.X, inst.Y);
    const auto os = oracle_min_separator(inst.graph, inst.X, inst.Y);
    CriterionResult r;
    r.passed = cert.value == 2 && cert.separator.size() == 2 && om.value == 2 && os.size == 2 &&
               cert.checks.all_passed() && cert.checks.separator == SeparatorCheck::verified;
    r.detail = "value " + std::to_string(cert.value) + ", separator " + std::to_string(cert.separator.size()) +
               ", oracle max " + std::to_string(om.value) + ", oracle min " + std::to_string(os.size);
    return r;
  }

  CriterionResult fig1b() {
    const auto inst = fixtures::load(fixtures::fig1b);
    const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
    const auto om = oracle_max_links(inst.graph, inst.X, inst.Y);
    const auto& sep = cert.separator;
    const bool clean = !has_xy_link(delete_vertices(inst.graph, sep), bimenger::detail::minus(inst.X, sep),
                                    bimenger::detail::minus(inst.Y, sep));
    int paths_only = 0;
    for (const auto& l : om.links)
      if (l.kind == LinkKind::path) ++paths_only;
    CriterionResult r;
    r.passed = cert.value == 2 && om.value == 2 && sep.size() == 1 && clean && cert.checks.all_passed();
    r.detail = "value " + std::to_string(cert.value) + ", separator {" + (sep.empty() ? "" : sep.front().str()) +
               "} of size " + std::to_string(sep.size()) + (clean ? " clears every link" : " leaves a link") +
               ", links counted with weight 1 would give " + std::to_string(om.links.size());
    return r;
  }

  CriterionResult oracle_equivalence() {
    const auto& family = solved();
    detail::Tally tally;
    for (const auto& s : family) {
      const std::string at = detail::label(s.params);
      if (!s.error.empty()) {
        tally.record(false, at + ": " + s.error);
        continue;
      }
      const bool ok = s.cert.value == s.oracle_max.value &&
                      static_cast<int>(s.cert.separator.size()) <= s.cert.value && s.separator_clean &&
                      s.oracle_max.value >= static_cast<int>(s.oracle_min.size) && s.cert.checks.all_passed();
      tally.record(ok, at + ": value " + std::to_string(s.cert.value) + " vs oracle " +
                           std::to_string(s.oracle_max.value) + ", |S| " + std::to_string(s.cert.separator.size()));
    }
    CriterionResult r;
    r.passed = tally.failed == 0 && tally.checked == config_.trials;
    r.detail = tally.summary();
    return r;
  }

  CriterionResult lp_integrality() {
    const auto& family = solved();
    detail::Tally primal, dual, duality;
    std::size_t fractional_vertices = 0, gaps = 0, integer_duals = 0;
    for (const auto& s : family) {
      const std::string at = detail::label(s.params);
      if (!s.error.empty() || !s.cert.lp) {
        primal.record(false, at + ": " + s.error);
        continue;
      }
      const auto& lp = *s.cert.lp;
      const bool integral = is_integral(lp.primal.values);
      if (!integral && detail::is_vertex(build_primal(lp.split.graph, lp.split.f), lp.primal.values))
        ++fractional_vertices;
      if (lp.primal_value != lp.xf) ++gaps;
      if (lp.dual_integer) ++integer_duals;
      primal.record(integral, at + ": relaxation optimum " + to_string(lp.primal_value) + ", integer optimum " +
                                  to_string(lp.xf));
      dual.record(is_integral(lp.dual.values), at);
      duality.record(lp.primal_value == lp.dual_value, at);
    }
    CriterionResult r;
    r.passed = primal.failed == 0 && dual.failed == 0 && duality.failed == 0;
    r.detail = "primal basic optimum integral " + primal.summary() + " | fractional optima confirmed as vertices " +
               std::to_string(fractional_vertices) + " | relaxation above integer optimum " + std::to_string(gaps) +
               " | dual basic optimum integral " + dual.summary() + " | cuts from an integer dual optimum " +
               std::to_string(integer_duals) + " | primal = dual " + duality.summary();
    return r;
  }

  CriterionResult two_regular() {
    const std::size_t count = std::max<std::size_t>(50, config_.trials / 4);
    detail::Tally tally;
    std::size_t cross_checked = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::stream_seed(config_, 5, i);
      SeededRng rng(seed);
      GenParams p;
      p.seed = seed;
      p.n = 3 + rng.below(4);
      p.m = 2 + rng.below(7);
      p.x_size = 0;
      p.y_size = 0;
      const auto g = random_instance(p).graph;
      const auto m = incidence_matrix(g).entries;
      const auto bad = find_k_regular_violation(m, 2, 5);
      bool ok = !bad.has_value();
      if (i % 10 == 0) {
        ++cross_checked;
        ok = ok && !find_k_regular_violation(m, 2, 5, RegularityRoute::exact_rational).has_value();
      }
      tally.record(ok, detail::label(p));
    }
    CriterionResult r;
    r.passed = tally.failed == 0;
    r.detail = tally.summary() + " (" + std::to_string(cross_checked) + " cross-checked by exact inversion)";
    return r;
  }

  CriterionResult cut_soundness() {
    const auto& family = solved();
    detail::Tally tally;
    std::size_t paths = 0, turnarounds = 0;
    for (const auto& s : family) {
      if (!s.cert.lp) continue;
      const auto report = verify_cut_soundness(*s.cert.lp);
      paths += report.paths_checked;
      turnarounds += report.turnarounds_checked;
      tally.record(report.ok(), detail::label(s.params));
    }
    CriterionResult r;
    r.passed = tally.failed == 0 && tally.checked > 0;
    r.detail = tally.summary() + "; " + std::to_string(paths) + " paths and " + std::to_string(turnarounds) +
               " turnarounds of g' checked";
    return r;
  }

  CriterionResult no_turnaround() {
    const std::size_t wanted = std::max<std::size_t>(50, config_.trials / 4);
    detail::Tally tally;
    std::size_t attempts = 0;
    for (std::uint64_t i = 0; tally.checked < wanted && attempts < 200 * wanted; ++i, ++attempts) {
      const std::uint64_t seed = detail::stream_seed(config_, 7, i);
      SeededRng rng(seed ^ 0x27d4eb2fULL);
      GenParams p;
      p.seed = seed;
      p.n = 2 + rng.below(std::max<std::size_t>(config_.max_vertices, 2) - 1);
      p.m = rng.below(11);
      p.x_size = 1 + rng.below(std::min<std::size_t>(3, p.n - 1));
      p.y_size = 1 + rng.below(std::min<std::size_t>(3, p.n - p.x_size));
      const auto inst = random_instance(p);
      if (has_xy_turnaround(inst.graph, inst.X, inst.Y)) continue;
      const auto report = check_no_turnaround_equality(inst.graph, inst.X, inst.Y);
      tally.record(report.verdict == NoTurnaroundVerdict::holds,
                   detail::label(p) + ": solver " + std::to_string(report.solver_value) + ", max " +
                       std::to_string(report.oracle_max) + ", min " + std::to_string(report.oracle_min));
    }
    CriterionResult r;
    r.passed = tally.failed == 0 && tally.checked >= wanted;
    r.detail = tally.summary() + " (" + std::to_string(attempts) + " draws)";
    return r;
  }

  CriterionResult xpaths() {
    const std::size_t count = std::max<std::size_t>(100, config_.trials / 2);
    detail::Tally tally;
    for (std::size_t i = 0; i < count; ++i) {
      const std::uint64_t seed = detail::stream_seed(config_, 8, i);
      SeededRng rng(seed ^ 0x165667b1ULL);
      GenParams p;
      p.seed = seed;
      p.n = 2 + rng.below(std::min<std::size_t>(config_.max_vertices, 6) - 1);
      p.m = rng.below(11);
      p.x_size = 1 + rng.below(std::min<std::size_t>(4, p.n));
      p.y_size = 0;
      try {
        const auto inst = random_instance(p);
        const auto cert = solve_xpaths(inst.graph, inst.X);
        const auto oracle = oracle_xpaths(inst.graph, inst.X);
        const bool ok = cert.value == oracle.max_packing &&
                        2 * static_cast<std::size_t>(cert.value) >= oracle.min_hitting &&
                        cert.separator.size() <= 2 * static_cast<std::size_t>(cert.value) &&
                        cert.checks.all_passed() && cert.checks.separator == SeparatorCheck::verified;
        tally.record(ok, detail::label(p) + ": packing " + std::to_string(cert.value) + " vs oracle " +
                             std::to_string(oracle.max_packing) + ", hitting " + std::to_string(oracle.min_hitting));
      } catch (const std::exception& e) {
        tally.record(false, detail::label(p) + ": " + e.what());
      }
    }
    const auto tri = fixtures::load(fixtures::x_triangle);
    const auto cert = solve_xpaths(tri.graph, tri.X);
    const auto oracle = oracle_xpaths(tri.graph, tri.X);
    const bool tight = cert.value == 1 && oracle.min_hitting == 2 && cert.separator.size() <= 2;
    CriterionResult r;
    r.passed = tally.failed == 0 && tally.checked >= 100 && tight;
    r.detail = tally.summary() + "; X-triangle packing " + std::to_string(cert.value) + ", min hitting set " +
               std::to_string(oracle.min_hitting);
    return r;
  }

  CriterionResult gadget_witness() {
    const auto g = build_graph({VertexId("a"), VertexId("b")}, {});
    const VertexSet X{VertexId("a")}, Y{VertexId("b")};
    const auto cert = solve_menger(g, X, Y);
    const auto [plain, st] = detail::unmodified_attachment(g, X, Y);
    const auto plain_oracle = oracle_st(plain, st.first, st.second);
    CriterionResult r;
    r.passed = cert.value == 0 && cert.separator.empty() && cert.checks.all_passed();
    r.detail = "value " + std::to_string(cert.value) + ", separator size " + std::to_string(cert.separator.size()) +
               "; unmodified attachment gives " + std::to_string(plain_oracle.packing.value) + "/" +
               std::to_string(plain_oracle.separator.size);
    return r;
  }

 private:
  template <class Fn>
  CriterionResult timed(int id, std::string name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.id = id;
    r.name = std::move(name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  const std::vector<detail::Solved>& solved() {
    if (!family_) family_ = detail::solve_family(config_);
    return *family_;
  }

  Config config_;
  std::optional<std::vector<detail::Solved>> family_;
};

inline std::vector<CriterionResult> run(const Config& config) { return Runner(config).run_all(); }

inline std::string format(const CriterionResult& r) {
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2fs", r.seconds);
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name + " (" + secs +
         "): " + r.detail;
}

}  // namespace bimenger::selfcheck
