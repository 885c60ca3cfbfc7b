#pragma once

#include <vector>

#include "gconj/graph.hpp"

namespace gconj {

/// Eigendecomposition of a dense symmetric matrix (row-major, n x n) by the
/// cyclic Jacobi rotation method, sweeping until every off-diagonal entry is
/// below 1e-10 in magnitude. Eigenvalues come back ascending; when vectors
/// are requested, column k of `vectors` (entries vectors[i*n + k]) is the
/// unit eigenvector for values[k].
struct EigenSystem {
  std::vector<double> values;
  std::vector<double> vectors;  // empty unless requested
};

EigenSystem jacobi_eigensystem(std::vector<double> matrix, int n, bool want_vectors);

/// Adjacency spectrum of a graph, ascending.
std::vector<double> adjacency_spectrum(const Graph& g);

}  // namespace gconj
