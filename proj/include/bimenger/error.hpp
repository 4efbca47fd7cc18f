#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bimenger {

enum class ErrorKind {
  unknown_vertex,
  unknown_edge,
  loop_rejected,
  duplicate_vertex_id,
  duplicate_edge_id,
  size_bound_exceeded,
  equal_terminals,
  not_normalized,
  direct_terminal_edge,
  invalid_derived_link,
  unmappable_edge,
  dimension_mismatch,
  not_balanced,
  not_integral,
  dual_infeasible,
  syntax_error,
  invalid_params,
  verification_failure,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::unknown_edge: return "UnknownEdge";
    case ErrorKind::loop_rejected: return "LoopRejected";
    case ErrorKind::duplicate_vertex_id: return "DuplicateVertexId";
    case ErrorKind::duplicate_edge_id: return "DuplicateEdgeId";
    case ErrorKind::size_bound_exceeded: return "SizeBoundExceeded";
    case ErrorKind::equal_terminals: return "EqualTerminals";
    case ErrorKind::not_normalized: return "NotNormalized";
    case ErrorKind::direct_terminal_edge: return "DirectTerminalEdge";
    case ErrorKind::invalid_derived_link: return "InvalidDerivedLink";
    case ErrorKind::unmappable_edge: return "UnmappableEdge";
    case ErrorKind::dimension_mismatch: return "DimensionMismatch";
    case ErrorKind::not_balanced: return "NotBalanced";
    case ErrorKind::not_integral: return "NotIntegral";
    case ErrorKind::dual_infeasible: return "DualInfeasible";
    case ErrorKind::syntax_error: return "SyntaxError";
    case ErrorKind::invalid_params: return "InvalidParams";
    case ErrorKind::verification_failure: return "VerificationFailure";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI's exit-code mapping) can dispatch without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace bimenger
