#include "gconj/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gconj {

EigenSystem jacobi_eigensystem(std::vector<double> a, int n, bool want_vectors) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("matrix size mismatch");
  constexpr double kOffTol = 1e-10;
  constexpr int kMaxSweeps = 100;

  std::vector<double> v;
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }
  auto at = [&](std::vector<double>& m, int i, int j) -> double& {
    return m[static_cast<std::size_t>(i) * n + j];
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(at(a, p, q)));
    if (off < kOffTol) break;

    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        double apq = at(a, p, q);
        if (std::abs(apq) < kOffTol) continue;
        double tau = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(tau * tau + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;

        for (int k = 0; k < n; ++k) {
          double akp = at(a, k, p), akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(a, p, k), aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        if (want_vectors)
          for (int k = 0; k < n; ++k) {
            double vkp = at(v, k, p), vkq = at(v, k, q);
            at(v, k, p) = c * vkp - s * vkq;
            at(v, k, q) = s * vkp + c * vkq;
          }
      }
  }

  EigenSystem out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = a[static_cast<std::size_t>(i) * n + i];

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int x, int y) { return out.values[x] < out.values[y]; });
  std::vector<double> sorted(n);
  for (int k = 0; k < n; ++k) sorted[k] = out.values[idx[k]];
  out.values = std::move(sorted);
  if (want_vectors) {
    out.vectors.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        out.vectors[static_cast<std::size_t>(i) * n + k] =
            v[static_cast<std::size_t>(i) * n + idx[k]];
  }
  return out;
}

std::vector<double> adjacency_spectrum(const Graph& g) {
  int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u)) a[static_cast<std::size_t>(u) * n + v] = 1.0;
  return jacobi_eigensystem(std::move(a), n, false).values;
}

}  // namespace gconj
