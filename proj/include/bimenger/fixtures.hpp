#pragma once

#include <string_view>

#include "bimenger/instance_io.hpp"

namespace bimenger::fixtures {

/// Two all-positive triangles, one on X and one on Y. Every X-Y link is a
/// turnaround; packing and minimum separator are both 2.
inline constexpr std::string_view fig1a = R"(# two X-X triangles joined to nothing: every X-Y link is a turnaround
vertex x1
vertex x2
vertex x3
vertex y1
vertex y2
vertex y3
edge x1 x2 ++
edge x2 x3 ++
edge x1 x3 ++
edge y1 y2 ++
edge y2 y3 ++
edge y1 y3 ++
set X x1 x2 x3
set Y y1 y2 y3
)";

/// fig1a without the X-edge x2x3. Packing 2, but deleting x1 alone leaves no
/// link.
inline constexpr std::string_view fig1b = R"(# fig1a without the X-edge x2x3; x1 lies on both remaining X-edges
vertex x1
vertex x2
vertex x3
vertex y1
vertex y2
vertex y3
edge x1 x2 ++
edge x1 x3 ++
edge y1 y2 ++
edge y2 y3 ++
edge y1 y3 ++
set X x1 x2 x3
set Y y1 y2 y3
)";

/// All-positive triangle on X: one X-path fits, two vertices must go.
inline constexpr std::string_view x_triangle = R"(# all-positive triangle on X
vertex a
vertex b
vertex c
edge a b ++
edge b c ++
edge a c ++
set X a b c
)";

inline InstanceFile load(std::string_view text) { return parse_instance(std::string(text)); }

}  // namespace bimenger::fixtures
