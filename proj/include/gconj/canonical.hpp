#pragma once

#include <string>

#include "gconj/graph.hpp"

namespace gconj {

/// Canonically relabeled copy: two graphs are isomorphic iff their
/// canonical graphs are label-identical. Color-refinement partitions the
/// vertices, then a backtracking search picks the permutation minimizing
/// the adjacency-triangle bitstring (with twin-collapse and prefix pruning).
/// Requires n <= 16; throws std::length_error beyond that.
Graph canonical_graph(const Graph& g);

/// graph6 string of the canonical graph — a portable isomorphism key.
std::string canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// Cache/store key: canonical_form for n <= 16, plain graph6 above that
/// (larger graphs are keyed by their given labeling).
std::string table_key(const Graph& g);

}  // namespace gconj
