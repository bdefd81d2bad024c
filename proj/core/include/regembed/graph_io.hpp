#pragma once

#include <string>
#include <string_view>

#include "regembed/multigraph.hpp"

namespace regembed {

enum class GraphFormat { edge_list, json };

// Parses either format, auto-detected: JSON if the first non-space character
// is '{', otherwise the edge-list format (first line n, then "i j" or
// "i j m" lines with 1-based vertices; '#' starts a comment; repeated lines
// accumulate multiplicity).
Multigraph parse_multigraph(std::string_view text);

std::string serialize_multigraph(const Multigraph& g, GraphFormat format);

}  // namespace regembed
