#include <gtest/gtest.h>

#include "bimenger/fixtures.hpp"
#include "support.hpp"

using namespace bimenger;
using namespace support;

namespace {

// s-s almost path through a, t-t almost path through b, no s-t path.
BidirectedGraph two_almost_paths() {
  return graph({"s", "a", "t", "b"}, {{"s", "a", "-+"}, {"s", "a", "--"}, {"t", "b", "++"}, {"t", "b", "+-"}});
}

std::vector<Rational> ones(std::size_t n) { return std::vector<Rational>(n, Rational(1)); }

void expect_sound(const BidirectedGraph& g, const VertexSet& X, const VertexSet& Y, const MengerCertificate& cert,
                  std::uint64_t seed) {
  EXPECT_TRUE(cert.checks.all_passed()) << "seed " << seed;
  EXPECT_EQ(cert.checks.separator, SeparatorCheck::verified) << "seed " << seed;
  EXPECT_LE(static_cast<int>(cert.separator.size()), cert.value) << "seed " << seed;
  int total = 0;
  for (const auto& l : cert.links) {
    EXPECT_NE(classify_link(g, l, X, Y).verdict, LinkClass::not_a_link) << "seed " << seed;
    total += l.weight();
  }
  EXPECT_EQ(total, cert.value);
  EXPECT_TRUE(links_disjoint(cert.links));
  const auto rest = delete_vertices(g, cert.separator);
  EXPECT_TRUE(
      enumerate_xy_links(rest, detail::minus(X, cert.separator), detail::minus(Y, cert.separator)).empty())
      << "seed " << seed;
}

}  // namespace

TEST(DecomposePacking, SinglePath) {
  const auto sp = split_and_close(graph({"s", "v", "t"}, {{"s", "v", "-+"}, {"v", "t", "-+"}}), V("s"), V("t"));
  const auto d = decompose_packing(sp.graph, sp.f, ones(3), Rational(1));
  ASSERT_EQ(d.links.size(), 1u);
  EXPECT_EQ(d.links[0].kind, LinkKind::path);
  EXPECT_EQ(d.links[0].source_part.front(), V("s"));
  EXPECT_EQ(d.links[0].source_part.back(), V("t"));
  EXPECT_EQ(d.slack_cycles, 0u);
}

TEST(DecomposePacking, TurnaroundUsesTwoCopiesOfF) {
  const auto sp = split_and_close(two_almost_paths(), V("s"), V("t"));
  const auto d = decompose_packing(sp.graph, sp.f, ones(sp.graph.num_edges() - 1), Rational(2));
  ASSERT_EQ(d.links.size(), 1u);
  EXPECT_EQ(d.links[0].kind, LinkKind::turnaround);
  EXPECT_EQ(d.links[0].weight(), 2);
  EXPECT_TRUE(is_almost_path(sp.graph, d.links[0].source_part));
  EXPECT_TRUE(is_almost_path(sp.graph, d.links[0].target_part));
}

TEST(DecomposePacking, SlackCycleIsDroppedAndCounted) {
  // c and d carry an alternating cycle once split: (+ at c, + at d) and
  // (- at c, - at d).
  const auto g = graph({"s", "a", "t", "b", "c", "d"}, {{"s", "a", "-+"},
                                                        {"s", "a", "--"},
                                                        {"t", "b", "++"},
                                                        {"t", "b", "+-"},
                                                        {"c", "d", "++"},
                                                        {"c", "d", "--"}});
  const auto sp = split_and_close(g, V("s"), V("t"));
  const auto order = primal_edge_order(sp.graph, sp.f);
  std::vector<Rational> with_cycle = ones(order.size());
  std::vector<Rational> without(order.size(), Rational(1));
  for (std::size_t c = 0; c < order.size(); ++c) {
    const Edge& e = sp.graph.edge(order[c]);
    const auto& ou = sp.map.vertex_origin.at(e.u);
    if (ou == V("c") || ou == V("d")) without[c] = 0;
  }
  const auto base = decompose_packing(sp.graph, sp.f, without, Rational(2));
  const auto extra = decompose_packing(sp.graph, sp.f, with_cycle, Rational(2));
  EXPECT_EQ(base.slack_cycles, 0u);
  EXPECT_EQ(extra.slack_cycles, 1u);
  ASSERT_EQ(extra.links.size(), base.links.size());
  EXPECT_EQ(extra.links[0].edge_set(), base.links[0].edge_set());
}

TEST(DecomposePacking, RejectsFractionalAndUnbalancedInput) {
  const auto sp = split_and_close(graph({"s", "v", "t"}, {{"s", "v", "-+"}, {"v", "t", "-+"}}), V("s"), V("t"));
  std::vector<Rational> half(3, make_rational(1, 2));
  try {
    decompose_packing(sp.graph, sp.f, half, Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_integral);
  }
  try {
    decompose_packing(sp.graph, sp.f, std::vector<Rational>(3, Rational(0)), Rational(1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::not_balanced);
  }
}

TEST(ExtractCut, ZeroPotentialsAreInfeasible) {
  const auto sp = split_and_close(graph({"s", "v", "t"}, {{"s", "v", "-+"}, {"v", "t", "-+"}}), V("s"), V("t"));
  try {
    extract_cut(sp.graph, sp.f, std::vector<Rational>(4, Rational(0)), std::vector<Rational>(3, Rational(0)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::dual_infeasible);
  }
}

TEST(ExtractCut, PathInstanceCutsOneEdge) {
  const auto g = graph({"s", "v", "t"}, {{"s", "v", "-+"}, {"v", "t", "-+"}});
  const auto cert = solve_st(g, V("s"), V("t"));
  ASSERT_TRUE(cert.lp.has_value());
  EXPECT_EQ(cert.lp->cut.edges.size(), 1u);
  EXPECT_EQ(map_cut_to_separator({cert.lp->split.map}, cert.lp->cut.edges), vs({"v"}));
  // hand-built dual: z_s = 2, everything else 0, y = 1 on the first edge
  const auto& gp = cert.lp->split.graph;
  std::vector<Rational> z(gp.num_vertices(), Rational(0));
  z[gp.index_of(V("s"))] = 2;
  std::vector<Rational> y(gp.num_edges() - 1, Rational(0));
  y[0] = 1;
  const auto cut = extract_cut(gp, cert.lp->split.f, z, y);
  EXPECT_EQ(cut.edges, std::vector<EdgeId>{EdgeId{0}});
}

TEST(ExtractCut, Fig1bCutIsSmallAndMapsToX1) {
  const auto inst = fixtures::load(fixtures::fig1b);
  const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
  ASSERT_TRUE(cert.lp.has_value());
  Rational y_total = 0;
  for (const auto& v : cert.lp->y) y_total += v;
  EXPECT_LE(Rational(static_cast<long>(cert.lp->cut.edges.size())), y_total);
  EXPECT_EQ(cert.separator, vs({"x1"}));
}

TEST(SolveMenger, Fig1a) {
  const auto inst = fixtures::load(fixtures::fig1a);
  const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
  EXPECT_EQ(cert.value, 2);
  EXPECT_EQ(cert.separator.size(), 2u);
  ASSERT_EQ(cert.links.size(), 1u);
  EXPECT_EQ(cert.links[0].kind, LinkKind::turnaround);
  expect_sound(inst.graph, inst.X, inst.Y, cert, 0);
  // The relaxation of the primal program is not tight here.
  EXPECT_FALSE(cert.checks.relaxation_tight);
  EXPECT_EQ(cert.primal_value, 3);
  EXPECT_EQ(cert.dual_value, 3);
}

TEST(SolveMenger, Fig1bStrictInequality) {
  const auto inst = fixtures::load(fixtures::fig1b);
  const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
  EXPECT_EQ(cert.value, 2);
  EXPECT_EQ(cert.separator, vs({"x1"}));
  EXPECT_EQ(cert.checks.separator_source, SeparatorSource::cut);
  expect_sound(inst.graph, inst.X, inst.Y, cert, 0);
}

TEST(SolveMenger, SharedVertexIsATrivialPath) {
  const auto g = graph({"v"}, {});
  const auto cert = solve_menger(g, vs({"v"}), vs({"v"}));
  EXPECT_EQ(cert.value, 1);
  EXPECT_EQ(cert.separator, vs({"v"}));
  ASSERT_EQ(cert.links.size(), 1u);
  EXPECT_TRUE(cert.links[0].source_part.trivial());
}

TEST(SolveMenger, EmptySideShortCircuits) {
  const auto g = graph({"v", "w"}, {{"v", "w", "++"}});
  const auto cert = solve_menger(g, {}, vs({"w"}));
  EXPECT_EQ(cert.value, 0);
  EXPECT_TRUE(cert.separator.empty());
  EXPECT_TRUE(cert.links.empty());
  EXPECT_FALSE(cert.lp.has_value());
}

TEST(SolveMenger, RandomInstancesAreSoundAndMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    const auto inst = random_case(seed, 6, 9);
    const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
    expect_sound(inst.graph, inst.X, inst.Y, cert, seed);
    EXPECT_EQ(cert.value, oracle_max_links(inst.graph, inst.X, inst.Y).value) << "seed " << seed;
    EXPECT_GE(cert.separator.size(), oracle_min_separator(inst.graph, inst.X, inst.Y).size) << "seed " << seed;
    // value <= LP optimum of the primal program = LP optimum of the dual program >= |F|
    EXPECT_LE(Rational(cert.value), cert.primal_value);
    EXPECT_EQ(cert.primal_value, cert.dual_value);
    EXPECT_LE(Rational(static_cast<long>(cert.cut_size)), cert.dual_value);
  }
}

TEST(SolveMenger, CutSoundnessOnRandomInstances) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = random_case(seed, 5, 7, 2);
    const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
    ASSERT_TRUE(cert.lp.has_value());
    const auto report = verify_cut_soundness(*cert.lp);
    EXPECT_TRUE(report.ok()) << "seed " << seed;
  }
}

TEST(SolveMenger, SwitchingAVertexKeepsTheValue) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto inst = random_case(seed, 5, 8);
    const int value = solve_menger(inst.graph, inst.X, inst.Y).value;
    for (const auto& v : inst.graph.vertices()) {
      const auto cert = solve_menger(switch_vertex(inst.graph, v), inst.X, inst.Y);
      EXPECT_EQ(cert.value, value) << "seed " << seed << " switch " << v.str();
      EXPECT_TRUE(cert.checks.all_passed());
    }
  }
}

TEST(SolveMenger, Deterministic) {
  const auto inst = random_case(11, 7, 10);
  const auto a = solve_menger(inst.graph, inst.X, inst.Y);
  const auto b = solve_menger(inst.graph, inst.X, inst.Y);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.separator, b.separator);
  ASSERT_EQ(a.links.size(), b.links.size());
  for (std::size_t i = 0; i < a.links.size(); ++i) EXPECT_EQ(a.links[i].edge_set(), b.links[i].edge_set());
}

TEST(SolveSt, AlternatingPath) {
  const auto g = graph({"s", "v", "t"}, {{"s", "v", "-+"}, {"v", "t", "-+"}});
  const auto cert = solve_st(g, V("s"), V("t"));
  EXPECT_EQ(cert.value, 1);
  EXPECT_EQ(cert.separator, vs({"v"}));
  EXPECT_TRUE(cert.checks.all_passed());
}

TEST(SolveSt, TwoAlmostPathsMakeATurnaround) {
  const auto g = two_almost_paths();
  const auto cert = solve_st(g, V("s"), V("t"));
  EXPECT_EQ(cert.value, 2);
  EXPECT_EQ(oracle_st(g, V("s"), V("t")).packing.value, 2);
  ASSERT_EQ(cert.links.size(), 1u);
  EXPECT_EQ(cert.links[0].kind, LinkKind::turnaround);
  EXPECT_TRUE(cert.checks.all_passed());
  EXPECT_FALSE(detail::contains(cert.separator, V("s")));
  EXPECT_FALSE(detail::contains(cert.separator, V("t")));
}

TEST(SolveSt, Errors) {
  const auto direct = graph({"s", "t"}, {{"s", "t", "-+"}});
  try {
    solve_st(direct, V("s"), V("t"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::direct_terminal_edge);
  }
  try {
    solve_st(direct, V("s"), V("s"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::equal_terminals);
  }
}

// The basic dual optimum here is half-integral; the cut comes from an integer
// optimum of the dual instead.
TEST(SolveSt, FractionalDualFallsBackToIntegerDual) {
  const auto inst = parse_instance(
      "vertex v0\nvertex v1\nvertex v2\nvertex v3\nvertex v4\n"
      "edge v3 v1 --\nedge v1 v3 ++\nedge v4 v0 --\nedge v1 v4 ++\n"
      "edge v0 v3 --\nedge v2 v4 --\nedge v3 v0 --\n");
  const auto s = V("v0"), t = V("v1");
  const auto sp = split_and_close(normalize_terminals(inst.graph, s, t), s, t);
  EXPECT_FALSE(is_integral(simplex_max(build_dual(sp.graph, sp.f).lp).values));
  const auto cert = solve_st(inst.graph, s, t);
  ASSERT_TRUE(cert.lp.has_value());
  ASSERT_TRUE(cert.lp->dual_integer.has_value());
  EXPECT_TRUE(is_integral(cert.lp->z));
  EXPECT_TRUE(is_integral(cert.lp->y));
  EXPECT_TRUE(cert.checks.all_passed());
  EXPECT_EQ(cert.value, oracle_st(inst.graph, s, t).packing.value);
  EXPECT_TRUE(verify_cut_soundness(*cert.lp).ok());
}

TEST(SolveSt, RandomInstancesMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const auto inst = random_case(seed, 6, 9);
    const auto s = inst.graph.vertices()[0];
    const auto t = inst.graph.vertices()[1];
    if (has_direct_edge(inst.graph, s, t)) continue;
    const auto cert = solve_st(inst.graph, s, t);
    const auto oracle = oracle_st(inst.graph, s, t);
    EXPECT_EQ(cert.value, oracle.packing.value) << "seed " << seed;
    EXPECT_TRUE(cert.checks.all_passed()) << "seed " << seed;
    EXPECT_EQ(cert.checks.separator, SeparatorCheck::verified);
    EXPECT_GE(cert.separator.size(), oracle.separator.size);
  }
}

TEST(SolveXPaths, Triangle) {
  const auto inst = fixtures::load(fixtures::x_triangle);
  const auto cert = solve_xpaths(inst.graph, inst.X);
  EXPECT_EQ(cert.value, 1);
  EXPECT_LE(cert.separator.size(), 2u);
  EXPECT_GE(2 * cert.value, static_cast<int>(cert.separator.size()));
  EXPECT_TRUE(cert.checks.all_passed());
  EXPECT_EQ(cert.checks.separator, SeparatorCheck::verified);
}

TEST(SolveXPaths, EdgelessAndSingleEdge) {
  const auto edgeless = solve_xpaths(graph({"a", "b"}, {}), vs({"a", "b"}));
  EXPECT_EQ(edgeless.value, 0);
  EXPECT_TRUE(edgeless.separator.empty());
  const auto single = solve_xpaths(graph({"a", "b"}, {{"a", "b", "++"}}), vs({"a", "b"}));
  EXPECT_EQ(single.value, 1);
  EXPECT_EQ(single.separator.size(), 1u);
}

TEST(SolveXPaths, RandomInstancesMatchOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto inst = random_case(seed, 5, 7);
    const auto cert = solve_xpaths(inst.graph, inst.X);
    const auto oracle = oracle_xpaths(inst.graph, inst.X);
    EXPECT_EQ(cert.value, oracle.max_packing) << "seed " << seed;
    EXPECT_TRUE(cert.checks.all_passed()) << "seed " << seed;
    EXPECT_LE(static_cast<int>(cert.separator.size()), 2 * cert.value);
    for (const auto& l : cert.links) {
      EXPECT_TRUE(is_path(inst.graph, l.source_part));
      EXPECT_FALSE(l.source_part.trivial());
    }
  }
}

TEST(NoTurnaround, DagFromSourcesToSinks) {
  // a->c, b->c, c->d, c->e in the directed encoding
  const auto g = graph({"a", "b", "c", "d", "e"},
                       {{"a", "c", "-+"}, {"b", "c", "-+"}, {"c", "d", "-+"}, {"c", "e", "-+"}});
  const auto r = check_no_turnaround_equality(g, vs({"a", "b"}), vs({"d", "e"}));
  EXPECT_EQ(r.verdict, NoTurnaroundVerdict::holds);
  EXPECT_EQ(r.solver_value, 1);
}

TEST(NoTurnaround, Fig1aIsNotApplicable) {
  const auto inst = fixtures::load(fixtures::fig1a);
  EXPECT_EQ(check_no_turnaround_equality(inst.graph, inst.X, inst.Y).verdict, NoTurnaroundVerdict::not_applicable);
}

TEST(NoTurnaround, Edgeless) {
  const auto r = check_no_turnaround_equality(graph({"a", "b"}, {}), vs({"a"}), vs({"b"}));
  EXPECT_EQ(r.verdict, NoTurnaroundVerdict::holds);
  EXPECT_EQ(r.oracle_min, 0u);
}

TEST(NoTurnaround, RandomDirectedEncodings) {
  std::size_t applicable = 0;
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    auto inst = random_case(seed, 6, 9);
    std::vector<Edge> edges = inst.graph.edges();
    for (auto& e : edges) {
      e.sign_u = Sign::minus;
      e.sign_v = Sign::plus;
    }
    const auto g = BidirectedGraph::from_parts(inst.graph.vertices(), edges);
    const auto r = check_no_turnaround_equality(g, inst.X, inst.Y);
    EXPECT_NE(r.verdict, NoTurnaroundVerdict::fails) << "seed " << seed;
    applicable += r.verdict == NoTurnaroundVerdict::holds;
  }
  EXPECT_GT(applicable, 0u);
}
