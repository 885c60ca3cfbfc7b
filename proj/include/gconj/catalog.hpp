#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gconj/graph.hpp"

namespace gconj {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph star_graph(int leaves);  // K_{1,leaves}

/// The Petersen graph as Kneser(5,2): vertices are the 2-subsets of a
/// 5-set, edges join disjoint pairs.
Graph petersen_graph();

/// Even cycle of length c with a pendant path of q extra vertices attached
/// to every cycle vertex (c = 2 degenerates to a single edge). Order c*(1+q).
Graph ciliate_graph(int c, int q);

/// Named demo graphs, including the four running examples k5, c5, k2_3,
/// petersen. Deterministic order.
const std::vector<Graph>& catalog();

/// Resolves a catalog name or a parametric family name: p7, c9, k4, k2_3,
/// k1_5, petersen, ciliate_6_2. Throws std::invalid_argument on unknown names.
Graph catalog_graph(std::string_view name);

}  // namespace gconj
