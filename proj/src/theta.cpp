#include "gconj/theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "gconj/spectrum.hpp"

namespace gconj {

namespace {

struct Objective {
  int n;
  std::vector<std::pair<int, int>> edges;  // free entries
  std::vector<double> base;                // ones except zero on edges

  explicit Objective(const Graph& g) : n(g.order()) {
    base.assign(static_cast<std::size_t>(n) * n, 1.0);
    for (int u = 0; u < n; ++u)
      for (int v : g.neighbors(u))
        if (u < v) {
          edges.emplace_back(u, v);
          base[static_cast<std::size_t>(u) * n + v] = 0.0;
          base[static_cast<std::size_t>(v) * n + u] = 0.0;
        }
  }

  std::vector<double> matrix(const std::vector<double>& x) const {
    std::vector<double> m = base;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      m[static_cast<std::size_t>(u) * n + v] = x[e];
      m[static_cast<std::size_t>(v) * n + u] = x[e];
    }
    return m;
  }

  // Smoothed objective mu*log(sum exp(lambda/mu)), its gradient in the free
  // entries, and the exact largest eigenvalue of the current matrix.
  double eval(const std::vector<double>& x, double mu, std::vector<double>& grad,
              double& lam_max) const {
    EigenSystem es = jacobi_eigensystem(matrix(x), n, true);
    lam_max = es.values.back();

    std::vector<double> w(n);
    double sum = 0.0;
    for (int k = 0; k < n; ++k) {
      w[k] = std::exp((es.values[k] - lam_max) / mu);
      sum += w[k];
    }
    double f = lam_max + mu * std::log(sum);
    for (int k = 0; k < n; ++k) w[k] /= sum;

    grad.assign(edges.size(), 0.0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      double guv = 0.0;
      for (int k = 0; k < n; ++k)
        guv += w[k] * es.vectors[static_cast<std::size_t>(u) * n + k] *
               es.vectors[static_cast<std::size_t>(v) * n + k];
      grad[e] = 2.0 * guv;
    }
    return f;
  }
};

}  // namespace

ThetaResult lovasz_theta(const Graph& g, const ThetaOptions& options) {
  ThetaResult result;
  int n = g.order();
  if (n == 0) return result;

  Objective obj(g);
  std::vector<double> x(obj.edges.size(), 0.0);

  if (obj.edges.empty()) {
    // No free entries: the matrix is fixed (all-ones), largest eigenvalue n.
    result.value = static_cast<double>(n);
    result.converged = true;
    result.evaluations = 0;
    return result;
  }

  static const double kSchedule[] = {1.0, 0.3, 0.1, 0.03, 0.01,
                                     3e-3, 1e-3, 3e-4, 1e-4, 3e-5};
  double best = std::numeric_limits<double>::infinity();
  std::vector<double> grad, trial_grad, trial(x.size());
  double final_grad_norm = std::numeric_limits<double>::infinity();
  long evals = 0;

  for (double mu : kSchedule) {
    double step = 1.0;
    double lam;
    double f = obj.eval(x, mu, grad, lam);
    ++evals;
    best = std::min(best, lam);

    for (int it = 0; it < options.inner_iterations; ++it) {
      double g2 = 0.0;
      for (double gi : grad) g2 += gi * gi;
      final_grad_norm = std::sqrt(g2);
      if (final_grad_norm < options.grad_tol) break;

      // Armijo backtracking along the negative gradient; every trial point
      // is feasible, so its exact eigenvalue also feeds the best estimate.
      step = std::min(step * 2.0, 4.0);
      bool moved = false;
      while (step > 1e-14) {
        for (std::size_t e = 0; e < x.size(); ++e) trial[e] = x[e] - step * grad[e];
        double trial_lam;
        double ft = obj.eval(trial, mu, trial_grad, trial_lam);
        ++evals;
        best = std::min(best, trial_lam);
        if (ft <= f - 0.5 * step * g2) {
          x = trial;
          f = ft;
          grad = trial_grad;
          moved = true;
          break;
        }
        step *= 0.5;
      }
      if (!moved) break;
    }
  }

  result.value = best;
  result.converged = final_grad_norm < 1e-6;
  result.evaluations = evals;
  return result;
}

}  // namespace gconj
