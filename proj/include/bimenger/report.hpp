#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bimenger/certify.hpp"
#include "bimenger/oracle.hpp"

namespace bimenger {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(v.str());
  return out;
}

inline Json to_json(const Walk& w) {
  Json edges = Json::array();
  for (EdgeId e : w.edges) edges.push_back(e.value);
  return {{"vertices", to_json(w.vertices)}, {"edges", edges}};
}

/// {type, vertices, edges} with vertices/edges the union over all parts, plus
/// the ordered parts themselves.
inline Json to_json(const Link& l) {
  Json edges = Json::array();
  for (EdgeId e : l.edge_set()) edges.push_back(e.value);
  Json parts = Json::array({to_json(l.source_part)});
  if (l.kind == LinkKind::turnaround) parts.push_back(to_json(l.target_part));
  return {{"type", l.kind == LinkKind::path ? "path" : "turnaround"},
          {"vertices", to_json(l.vertex_set())},
          {"edges", edges},
          {"parts", parts}};
}

/// Boolean verification flags. lp_* and relaxation_tight describe the LP
/// relaxations and are not part of all_passed.
inline Json to_json(const CertificateChecks& c) {
  return {{"duality", c.duality},
          {"balanced", c.balanced},
          {"links_valid", c.links_valid},
          {"disjoint", c.disjoint},
          {"value_matches", c.value_matches},
          {"cut_bound", c.cut_bound},
          {"separator_bound", c.separator_bound},
          {"separator_verified", c.separator == SeparatorCheck::verified},
          {"lp_primal_integral", c.primal_integral},
          {"lp_dual_integral", c.dual_integral},
          {"relaxation_tight", c.relaxation_tight},
          {"all_passed", c.all_passed()}};
}

inline Json diagnostics_json(const MengerCertificate& cert) {
  return {{"separator_status", std::string(to_string(cert.checks.separator))},
          {"separator_source", std::string(to_string(cert.checks.separator_source))},
          {"separator_pruned", cert.checks.separator_pruned},
          {"slack_cycles", cert.checks.slack_cycles},
          {"branch_and_bound_nodes", cert.lp ? cert.lp->integer.nodes : 0},
          {"integer_dual_cut", cert.lp && cert.lp->dual_integer.has_value()}};
}

inline Json to_json(const MengerCertificate& cert) {
  Json links = Json::array();
  for (const auto& l : cert.links) links.push_back(to_json(l));
  return {{"value", cert.value},
          {"links", links},
          {"separator", to_json(cert.separator)},
          {"separator_size", cert.separator.size()},
          {"separator_bound", cert.separator_bound},
          {"cut_size", cert.cut_size},
          {"lp", {{"primal", to_string(cert.primal_value)}, {"dual", to_string(cert.dual_value)}}},
          {"checks", to_json(cert.checks)},
          {"diagnostics", diagnostics_json(cert)}};
}

inline Json to_json(const PackingResult& p, const SeparatorResult& s) {
  Json links = Json::array();
  for (const auto& l : p.links) links.push_back(to_json(l));
  Json sep = s.infinite ? Json(nullptr) : to_json(s.vertices);
  return {{"max_links", p.value},
          {"links", links},
          {"separator_infinite", s.infinite},
          {"min_separator_size", s.infinite ? Json(nullptr) : Json(s.size)},
          {"separator", sep}};
}

inline Json to_json(const XPathOracleResult& r) {
  Json paths = Json::array();
  for (const auto& w : r.paths) paths.push_back(to_json(w));
  return {{"max_xpaths", r.max_packing},
          {"paths", paths},
          {"min_hitting_set_size", r.min_hitting},
          {"hitting_set", to_json(r.hitting_set)}};
}

namespace detail {

inline std::string describe(const Walk& w) {
  std::string out;
  for (std::size_t i = 0; i < w.vertices.size(); ++i) {
    if (i > 0) out += " -[e" + std::to_string(w.edges[i - 1].value) + "]- ";
    out += w.vertices[i].str();
  }
  return out;
}

inline std::string describe(const VertexSet& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? ", " : "") + vs[i].str();
  return out + "}";
}

}  // namespace detail

/// Plain-text rendering of a certificate.
inline std::string render_text(const MengerCertificate& cert) {
  std::string out = "value: " + std::to_string(cert.value) + "\n";
  for (const auto& l : cert.links) {
    if (l.kind == LinkKind::path) {
      out += "  path: " + detail::describe(l.source_part) + "\n";
    } else {
      out += "  turnaround: " + detail::describe(l.source_part) + "  |  " + detail::describe(l.target_part) + "\n";
    }
  }
  out += "separator (" + std::to_string(cert.separator.size()) + "): " + detail::describe(cert.separator) + "\n";
  out += "lp: primal " + to_string(cert.primal_value) + ", dual " + to_string(cert.dual_value) + ", |F| " +
         std::to_string(cert.cut_size) + "\n";
  out += "checks: " + std::string(cert.checks.all_passed() ? "passed" : "FAILED") + " (separator " +
         std::string(to_string(cert.checks.separator)) + ")\n";
  return out;
}

}  // namespace bimenger
