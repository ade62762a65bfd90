#pragma once

#include <string>

#include "netflippa/types.hpp"

namespace netflippa {

// Text edge-list format: lines "u v" with 0-based node ids; an optional
// header line "# n=<N>" fixes the node count; blank lines and other lines
// starting with '#' are ignored. (u, v) and (v, u) denote the same edge,
// duplicates collapse, u = v is a self-loop. Without a header the node count
// is max id + 1.

/// Parse an edge list into a dense symmetric 0/1 adjacency matrix.
/// Throws std::runtime_error with the offending line number on bad input.
Matrix read_edge_list(const std::string& path);

/// Parse edge-list text (same format/diagnostics as read_edge_list).
Matrix parse_edge_list(const std::string& text);

/// Write "# n=<N>" followed by one "u v" line per edge with u <= v,
/// in row-major order; byte-identical for equal inputs.
void write_edge_list(const std::string& path, const Matrix& a);

/// Edge-list text for a graph (used by write_edge_list).
std::string format_edge_list(const Matrix& a);

}  // namespace netflippa
