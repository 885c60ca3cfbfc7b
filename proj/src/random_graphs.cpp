#include "gconj/random_graphs.hpp"

#include <stdexcept>
#include <vector>

namespace gconj {

Graph random_er(int n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("random_er needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.uniform01() < p) g.add_edge(u, v);
  return g;
}

Graph random_regular(int n, int d, Rng& rng) {
  if (n < 1 || d < 0 || d >= n) throw std::invalid_argument("bad regular graph parameters");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("n*d must be even for a d-regular graph");
  constexpr int kAttempts = 2000;
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    for (int v = 0, i = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs[i++] = v;
    // Fisher-Yates pairing: shuffle, then read off consecutive pairs.
    for (int i = static_cast<int>(stubs.size()) - 1; i > 0; --i)
      std::swap(stubs[i], stubs[rng.uniform_int(0, i)]);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; simple && i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || g.edge(u, v)) simple = false;
      else g.add_edge(u, v);
    }
    if (simple) return g;
  }
  throw std::runtime_error("no simple pairing found; parameters too tight");
}

Graph random_bipartite(int a, int b, double p, Rng& rng) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be nonempty");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability outside [0,1]");
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (rng.uniform01() < p) g.add_edge(u, a + v);
  return g;
}

}  // namespace gconj
