#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "geodetic/graph.hpp"

namespace geodetic {

struct EdgeListOptions {
  /// Ids in the file start at 1.
  bool one_based = false;
  /// Reject disconnected graphs with ValidationError.
  bool strict = false;
};

// Text format: blank lines and lines starting with '#' or '%' are skipped;
// every other line starts with two non-negative integer ids "u v"
// (separated by whitespace or commas). Further
// tokens on a data line (weights, timestamps) are ignored. If the ids in the
// file are exactly 0..n-1 (1..n when one_based) they are kept, otherwise
// they are relabeled 0..n-1 in order of first appearance.

Graph parse_edge_list(std::istream& in, const EdgeListOptions& options = {});
Graph parse_edge_list(std::string_view text, const EdgeListOptions& options = {});
Graph read_edge_list(const std::filesystem::path& path,
                     const EdgeListOptions& options = {});

/// Writes 0-based "u v" lines with u < v in lexicographic order.
void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

}  // namespace geodetic
