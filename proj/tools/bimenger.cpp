#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "bimenger/bimenger.hpp"
#include "bimenger/report.hpp"
#include "bimenger/selfcheck.hpp"

namespace {

using namespace bimenger;

enum Exit : int { ok = 0, input_error = 1, verification_failed = 2, infinite_separator = 3 };

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

InstanceFile read_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

int emit_certificate(const MengerCertificate& cert, bool json, const Json& extra = {}) {
  if (json) {
    Json out = to_json(cert);
    for (const auto& [k, v] : extra.items()) out[k] = v;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << render_text(cert);
    for (const auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << "\n";
  }
  if (!cert.checks.all_passed()) throw VerificationFailure("certificate checks failed");
  return Exit::ok;
}

VertexId terminal(const std::optional<std::string>& flag, const std::optional<VertexId>& from_file, char which) {
  if (flag) return VertexId(*flag);
  if (from_file) return *from_file;
  throw std::invalid_argument(std::string("no terminal ") + which + " given on the command line or in the file");
}

int run_error(const Error& e) {
  std::cerr << "error: " << e.what() << "\n";
  switch (e.kind()) {
    case ErrorKind::direct_terminal_edge: return Exit::infinite_separator;
    case ErrorKind::verification_failure:
    case ErrorKind::not_balanced:
    case ErrorKind::not_integral:
    case ErrorKind::dual_infeasible:
    case ErrorKind::unmappable_edge:
    case ErrorKind::invalid_derived_link: return Exit::verification_failed;
    default: return Exit::input_error;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vertex-disjoint links in bidirected graphs: exact packings, separators and certificates"};
  app.require_subcommand(1);

  std::string input;
  bool json = false;

  auto* solve = app.add_subcommand("solve", "Maximum X-Y link packing and separator");
  bool oracle_verify = false;
  solve->add_option("--input", input, "Instance file")->required();
  solve->add_flag("--json", json, "Print JSON");
  solve->add_flag("--oracle-verify", oracle_verify, "Compare against the brute-force oracle");

  auto* solve_st_cmd = app.add_subcommand("solve-st", "Internally disjoint s-t links and separator");
  std::optional<std::string> s_flag, t_flag;
  solve_st_cmd->add_option("--input", input, "Instance file")->required();
  solve_st_cmd->add_option("--s", s_flag, "Source terminal (defaults to the file's)");
  solve_st_cmd->add_option("--t", t_flag, "Sink terminal (defaults to the file's)");
  solve_st_cmd->add_flag("--json", json, "Print JSON");

  auto* xpaths_cmd = app.add_subcommand("xpaths", "Maximum disjoint X-path packing and hitting set");
  xpaths_cmd->add_option("--input", input, "Instance file")->required();
  xpaths_cmd->add_flag("--json", json, "Print JSON");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force values and witnesses");
  oracle_cmd->add_option("--input", input, "Instance file")->required();
  oracle_cmd->add_flag("--json", json, "Print JSON");

  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  GenParams params;
  gen->add_option("--vertices", params.n, "Vertex count")->required();
  gen->add_option("--edges", params.m, "Edge count")->required();
  gen->add_option("--seed", params.seed, "Seed")->required();
  gen->add_option("--x", params.x_size, "Size of X");
  gen->add_option("--y", params.y_size, "Size of Y");
  gen->add_flag("--overlap", params.overlap_allowed, "Allow X and Y to intersect");

  auto* check = app.add_subcommand("selfcheck", "Run the acceptance property suite");
  selfcheck::Config config;
  check->add_option("--trials", config.trials, "Random instances for the oracle-equivalence family")->required();
  check->add_option("--seed", config.seed, "Seed")->required();
  check->add_option("--max-vertices", config.max_vertices, "Vertex bound for random instances")
      ->check(CLI::Range(2, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Exit::ok : Exit::input_error;
  }

  try {
    if (*solve) {
      const auto inst = read_instance(input);
      const auto cert = solve_menger(inst.graph, inst.X, inst.Y);
      Json extra = Json::object();
      if (oracle_verify) {
        const auto om = oracle_max_links(inst.graph, inst.X, inst.Y);
        const auto os = oracle_min_separator(inst.graph, inst.X, inst.Y);
        extra["oracle"] = to_json(om, os);
        if (om.value != cert.value || cert.checks.separator != SeparatorCheck::verified) {
          emit_certificate(cert, json, extra);
          throw VerificationFailure("certificate disagrees with the oracle");
        }
      }
      return emit_certificate(cert, json, extra);
    }
    if (*solve_st_cmd) {
      const auto inst = read_instance(input);
      const auto cert =
          solve_st(inst.graph, terminal(s_flag, inst.s, 's'), terminal(t_flag, inst.t, 't'));
      return emit_certificate(cert, json);
    }
    if (*xpaths_cmd) {
      const auto inst = read_instance(input);
      return emit_certificate(solve_xpaths(inst.graph, inst.X), json);
    }
    if (*oracle_cmd) {
      const auto inst = read_instance(input);
      Json out = Json::object();
      if (!inst.X.empty() || !inst.Y.empty())
        out["xy"] = to_json(oracle_max_links(inst.graph, inst.X, inst.Y),
                            oracle_min_separator(inst.graph, inst.X, inst.Y));
      if (!inst.X.empty()) out["xpaths"] = to_json(oracle_xpaths(inst.graph, inst.X));
      if (inst.s && inst.t) {
        const auto st = oracle_st(inst.graph, *inst.s, *inst.t);
        out["st"] = to_json(st.packing, st.separator);
      }
      if (json) {
        std::cout << out.dump(2) << "\n";
      } else {
        if (out.contains("xy"))
          std::cout << "X-Y links: max " << out["xy"]["max_links"] << ", min separator "
                    << out["xy"]["min_separator_size"] << " " << out["xy"]["separator"].dump() << "\n";
        if (out.contains("xpaths"))
          std::cout << "X-paths: max " << out["xpaths"]["max_xpaths"] << ", min hitting set "
                    << out["xpaths"]["min_hitting_set_size"] << " " << out["xpaths"]["hitting_set"].dump() << "\n";
        if (out.contains("st"))
          std::cout << "s-t links: max " << out["st"]["max_links"] << ", min separator "
                    << (out["st"]["separator_infinite"].get<bool>() ? std::string("infinite")
                                                                    : out["st"]["min_separator_size"].dump())
                    << "\n";
      }
      return Exit::ok;
    }
    if (*gen) {
      std::cout << serialize_instance(random_instance(params));
      return Exit::ok;
    }
    if (*check) {
      bool all = true;
      std::size_t passed = 0;
      const auto results = selfcheck::run(config);
      for (const auto& r : results) {
        std::cout << selfcheck::format(r) << "\n";
        all = all && r.passed;
        passed += r.passed;
      }
      std::cout << passed << "/" << results.size() << " criteria passed\n";
      return all ? Exit::ok : Exit::verification_failed;
    }
  } catch (const Error& e) {
    return run_error(e);
  } catch (const VerificationFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::verification_failed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Exit::input_error;
  }
  return Exit::ok;
}
