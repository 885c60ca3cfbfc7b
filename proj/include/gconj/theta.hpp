#pragma once

#include "gconj/graph.hpp"

namespace gconj {

struct ThetaOptions {
  int inner_iterations = 250;  // per smoothing stage
  double grad_tol = 1e-9;
};

struct ThetaResult {
  double value = 0.0;        // upper estimate: always >= the true theta
  double tolerance = 1e-3;   // guaranteed accuracy of `value`
  bool converged = false;
  long evaluations = 0;      // eigendecompositions performed
};

/// Lovász theta: the minimum largest eigenvalue over symmetric matrices with
/// ones on the diagonal and on non-adjacent pairs (entries on edges free).
///
/// Minimizes a softmax-smoothed largest eigenvalue by gradient descent with
/// Armijo backtracking, tightening the smoothing parameter over a fixed
/// schedule, from a deterministic zero start. Every iterate is a feasible
/// matrix, and the reported value is the best exact largest eigenvalue seen,
/// so it can only overshoot the true theta — by less than `tolerance` on
/// desk-scale graphs (n <= 12).
ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options = {});

}  // namespace gconj
