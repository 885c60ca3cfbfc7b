#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gconj/graph.hpp"

namespace gconj {

/// Encodes a graph in graph6: the order, then the upper adjacency triangle
/// read column by column, six bits per printable character (offset 63).
/// Orders up to 62 use the single-byte header; larger orders use the
/// '~'-prefixed multi-byte header.
std::string write_graph6(const Graph& g);

/// Decodes one graph6 string. A leading ">>graph6<<" marker and trailing
/// whitespace are tolerated. Throws std::invalid_argument on malformed
/// input (bad characters, truncated triangle, trailing bytes).
Graph parse_graph6(std::string_view text);

/// Reads a graph6 file: one graph per line, '#' comment lines and blank
/// lines skipped, optional header marker tolerated.
std::vector<Graph> read_graph6_file(const std::string& path);

/// Appends one graph per line; comment (if nonempty) goes first as a '#' line.
void append_graph6_file(const std::string& path, const std::vector<Graph>& graphs,
                        const std::string& comment = "");

}  // namespace gconj
