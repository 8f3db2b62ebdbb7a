#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "leapx/graph.hpp"

namespace leapx {

/// Short-form graph6 (n <= 62): header byte n+63, then the upper-triangle
/// bits column by column in 6-bit chunks, each chunk + 63. The long form is
/// deliberately unsupported.
Graph parse_graph6(const std::string& line);
std::string write_graph6(const Graph& g);

/// Every graph in a graph6 stream, one per non-empty line. Lines starting
/// with '>' (format headers) are skipped.
std::vector<Graph> read_graph6_lines(std::istream& in);

/// Edge list: one "u v" pair per line, 0-based; '#' starts a comment; blank
/// lines ignored; the first non-comment line may be "n=<count>" to declare
/// isolated vertices.
Graph parse_edgelist(std::istream& in);
std::string write_edgelist(const Graph& g);

}  // namespace leapx
