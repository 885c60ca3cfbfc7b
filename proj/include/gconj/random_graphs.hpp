#pragma once

#include "gconj/graph.hpp"
#include "gconj/rng.hpp"

namespace gconj {

/// G(n, p): each pair independently an edge with probability p.
Graph random_er(int n, double p, Rng& rng);

/// Uniform-ish d-regular graph by the pairing model: match up n*d stubs and
/// retry until the result is simple. Requires 0 <= d < n and n*d even;
/// throws std::runtime_error if no simple pairing shows up in the attempt cap.
Graph random_regular(int n, int d, Rng& rng);

/// Bipartite G(a, b, p) on sides {0..a-1} and {a..a+b-1}.
Graph random_bipartite(int a, int b, double p, Rng& rng);

}  // namespace gconj
