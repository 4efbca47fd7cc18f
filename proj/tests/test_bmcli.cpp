#include <gtest/gtest.h>

#include <regex>

#include "bimenger/fixtures.hpp"
#include "bimenger/report.hpp"
#include "bimenger/selfcheck.hpp"
#include "support.hpp"

using namespace bimenger;
using namespace support;

namespace {

ErrorKind parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return ErrorKind::verification_failure;
}

}  // namespace

TEST(ParseInstance, SmallInstance) {
  const auto inst = parse_instance("vertex a\nvertex b\nedge a b +-\nset X a\nset Y b");
  EXPECT_EQ(inst.graph.num_vertices(), 2u);
  ASSERT_EQ(inst.graph.num_edges(), 1u);
  EXPECT_EQ(inst.graph.edges()[0].sign_u, Sign::plus);
  EXPECT_EQ(inst.graph.edges()[0].sign_v, Sign::minus);
  EXPECT_EQ(inst.X, vs({"a"}));
  EXPECT_EQ(inst.Y, vs({"b"}));
  EXPECT_FALSE(inst.s.has_value());
}

TEST(ParseInstance, CommentsBlankLinesLabelsAndTerminals) {
  const auto inst = parse_instance(
      "# header\n\nvertex s   # trailing\nvertex t\nvertex v\nedge s v -+ left\nedge s v -+\n"
      "terminal s s\nterminal t t\n");
  ASSERT_EQ(inst.graph.num_edges(), 2u);
  EXPECT_EQ(inst.graph.edges()[0].label, "left");
  EXPECT_NE(inst.graph.edges()[0].id, inst.graph.edges()[1].id);
  EXPECT_EQ(inst.s, V("s"));
  EXPECT_EQ(inst.t, V("t"));
}

TEST(ParseInstance, Errors) {
  EXPECT_EQ(parse_error("vertex a\nedge a a ++\n"), ErrorKind::loop_rejected);
  EXPECT_EQ(parse_error("vertex a\nedge a b ++\n"), ErrorKind::unknown_vertex);
  EXPECT_EQ(parse_error("vertex a\nset X b\n"), ErrorKind::unknown_vertex);
  EXPECT_EQ(parse_error("vertex a\nvertex a\n"), ErrorKind::duplicate_vertex_id);
  EXPECT_EQ(parse_error("vertex a\nvertex b\nedge a b +*\n"), ErrorKind::syntax_error);
  EXPECT_EQ(parse_error("vertex a\nvertex b\nedge a b\n"), ErrorKind::syntax_error);
  EXPECT_EQ(parse_error("node a\n"), ErrorKind::syntax_error);
  EXPECT_EQ(parse_error("vertex a\nset Z a\n"), ErrorKind::syntax_error);
  EXPECT_EQ(parse_error("vertex a\nterminal q a\n"), ErrorKind::syntax_error);
}

TEST(ParseInstance, SyntaxErrorNamesTheLine) {
  try {
    parse_instance("vertex a\n\nbogus\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(ParseInstance, ShippedFixturesMatchEmbeddedCopies) {
  EXPECT_EQ(fixture("fig1a.bg"), fixtures::load(fixtures::fig1a));
  EXPECT_EQ(fixture("fig1b.bg"), fixtures::load(fixtures::fig1b));
  EXPECT_EQ(fixture("x_triangle.bg"), fixtures::load(fixtures::x_triangle));
  const auto a = fixture("fig1a.bg");
  EXPECT_EQ(a.graph.num_vertices(), 6u);
  EXPECT_EQ(a.graph.num_edges(), 6u);
  for (const auto& e : a.graph.edges()) {
    EXPECT_EQ(e.sign_u, Sign::plus);
    EXPECT_EQ(e.sign_v, Sign::plus);
  }
}

TEST(ParseInstance, LoopFixtureIsRejected) {
  try {
    fixture("bad_loop.bg");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::loop_rejected);
  }
}

TEST(Serialize, RoundTripOnFixtures) {
  for (const char* name : {"fig1a.bg", "fig1b.bg", "x_triangle.bg", "st_direct.bg", "st_path.bg"}) {
    const auto inst = fixture(name);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst) << name;
  }
}

TEST(Serialize, RoundTripOnGeneratedInstances) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenParams p{6, 12, seed, 2, 2, seed % 2 == 0};
    const auto inst = random_instance(p);
    EXPECT_EQ(parse_instance(serialize_instance(inst)), inst);
  }
}

TEST(RandomInstance, DeterministicFromSeed) {
  GenParams p{6, 12, 1, 2, 2, false};
  EXPECT_EQ(serialize_instance(random_instance(p)), serialize_instance(random_instance(p)));
  GenParams q = p;
  q.seed = 2;
  EXPECT_NE(serialize_instance(random_instance(p)), serialize_instance(random_instance(q)));
}

TEST(RandomInstance, ShapeAndConstraints) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    GenParams p{7, 14, seed, 3, 2, false};
    const auto inst = random_instance(p);
    EXPECT_EQ(inst.graph.num_vertices(), 7u);
    EXPECT_EQ(inst.graph.num_edges(), 14u);
    EXPECT_EQ(inst.X.size(), 3u);
    EXPECT_EQ(inst.Y.size(), 2u);
    for (const auto& y : inst.Y) EXPECT_FALSE(detail::contains(inst.X, y));
    for (const auto& e : inst.graph.edges()) EXPECT_NE(e.u, e.v);
  }
}

TEST(RandomInstance, EdgelessPair) {
  const auto inst = random_instance({2, 0, 5, 1, 1, false});
  EXPECT_EQ(inst.graph.num_vertices(), 2u);
  EXPECT_EQ(inst.graph.num_edges(), 0u);
}

TEST(RandomInstance, InvalidParams) {
  for (const GenParams& p : {GenParams{1, 1, 0, 1, 1, true}, GenParams{3, 2, 0, 4, 1, false},
                             GenParams{3, 2, 0, 2, 2, false}}) {
    try {
      random_instance(p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::invalid_params);
    }
  }
}

TEST(RandomInstance, SolverMatchesOracleOnTheListedExample) {
  const auto inst = random_instance({6, 12, 1, 1, 1, false});
  EXPECT_EQ(solve_menger(inst.graph, inst.X, inst.Y).value, oracle_max_links(inst.graph, inst.X, inst.Y).value);
}

TEST(TrialSeed, IndependentOfOrder) {
  EXPECT_EQ(trial_seed(7, 3), trial_seed(7, 3));
  EXPECT_NE(trial_seed(7, 3), trial_seed(7, 4));
  EXPECT_NE(trial_seed(7, 3), trial_seed(8, 3));
}

TEST(Json, CertificateSchema) {
  const auto inst = fixtures::load(fixtures::fig1b);
  const Json j = to_json(solve_menger(inst.graph, inst.X, inst.Y));
  ASSERT_TRUE(j["value"].is_number_integer());
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["separator"], Json::array({"x1"}));
  EXPECT_EQ(j["separator_size"], 1);
  ASSERT_TRUE(j["links"].is_array());
  for (const auto& l : j["links"]) {
    EXPECT_TRUE(l["type"] == "path" || l["type"] == "turnaround");
    EXPECT_TRUE(l["vertices"].is_array());
    EXPECT_TRUE(l["edges"].is_array());
  }
  const std::regex rational("-?[0-9]+/[0-9]+");
  EXPECT_TRUE(std::regex_match(j["lp"]["primal"].get<std::string>(), rational));
  EXPECT_TRUE(std::regex_match(j["lp"]["dual"].get<std::string>(), rational));
  ASSERT_TRUE(j["checks"].is_object());
  for (const auto& [k, v] : j["checks"].items()) EXPECT_TRUE(v.is_boolean()) << k;
  EXPECT_TRUE(j["checks"]["all_passed"].get<bool>());
  EXPECT_TRUE(j["diagnostics"].is_object());
}

TEST(Json, Fig1aValues) {
  const auto inst = fixtures::load(fixtures::fig1a);
  const Json j = to_json(solve_menger(inst.graph, inst.X, inst.Y));
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["separator_size"], 2);
  EXPECT_EQ(j["links"][0]["type"], "turnaround");
}

TEST(Json, OracleOutput) {
  const auto inst = fixtures::load(fixtures::fig1b);
  const Json j = to_json(oracle_max_links(inst.graph, inst.X, inst.Y), oracle_min_separator(inst.graph, inst.X, inst.Y));
  EXPECT_EQ(j["max_links"], 2);
  EXPECT_EQ(j["min_separator_size"], 1);
  EXPECT_EQ(j["separator"], Json::array({"x1"}));
  EXPECT_FALSE(j["separator_infinite"].get<bool>());

  const Json inf = to_json(PackingResult{1, {}}, SeparatorResult{true, 0, {}});
  EXPECT_TRUE(inf["min_separator_size"].is_null());
  EXPECT_TRUE(inf["separator"].is_null());
}

TEST(RenderText, MentionsValueAndSeparator) {
  const auto inst = fixtures::load(fixtures::fig1b);
  const auto text = render_text(solve_menger(inst.graph, inst.X, inst.Y));
  EXPECT_NE(text.find("value: 2"), std::string::npos);
  EXPECT_NE(text.find("separator (1): {x1}"), std::string::npos);
  EXPECT_NE(text.find("checks: passed"), std::string::npos);
}

TEST(Selfcheck, SmallRunIsReproducible) {
  selfcheck::Config c;
  c.trials = 12;
  c.seed = 3;
  c.max_vertices = 5;
  for (int id : {1, 2, 3, 9}) {
    const auto a = selfcheck::Runner(c).run_one(id);
    const auto b = selfcheck::Runner(c).run_one(id);
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.detail, b.detail);
    EXPECT_TRUE(a.passed) << selfcheck::format(a);
  }
}

TEST(Selfcheck, FormatLine) {
  selfcheck::CriterionResult r{4, "lp", false, "details", 0.5};
  const auto line = selfcheck::format(r);
  EXPECT_EQ(line.rfind("FAIL [4] lp", 0), 0u) << line;
  EXPECT_NE(line.find("details"), std::string::npos);
}
