#pragma once

#include <vector>

#include "gconj/graph.hpp"

namespace gconj {

/// All non-isomorphic simple graphs of the given order, as canonical
/// representatives sorted by canonical form. Built by vertex augmentation
/// from the previous order and cached per order. Supports 1 <= n <= 8;
/// throws std::out_of_range beyond that.
const std::vector<Graph>& all_graphs(int n);

/// The connected ones, same order and representatives.
std::vector<Graph> connected_graphs(int n);

}  // namespace gconj
