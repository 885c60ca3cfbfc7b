#include "gconj/invariants.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "gconj/spectrum.hpp"
#include "gconj/theta.hpp"

namespace gconj {

long long graph_order(const Graph& g) { return g.order(); }

long long graph_size(const Graph& g) { return g.size(); }

long long degree_sum(const Graph& g) { return 2LL * g.size(); }

long long max_degree(const Graph& g) {
  long long best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max<long long>(best, g.degree(v));
  return best;
}

namespace {

// Eccentricity extremes in one sweep; {-1,-1} when disconnected.
std::pair<int, int> eccentricity_range(const Graph& g) {
  int lo = INT_MAX, hi = 0;
  for (int v = 0; v < g.order(); ++v) {
    int ecc = 0;
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return {-1, -1};
      ecc = std::max(ecc, d);
    }
    lo = std::min(lo, ecc);
    hi = std::max(hi, ecc);
  }
  return {lo, hi};
}

}  // namespace

ExtendedReal radius(const Graph& g) {
  auto [lo, hi] = eccentricity_range(g);
  return lo < 0 ? ExtendedReal::undefined() : ExtendedReal::finite(lo);
}

ExtendedReal diameter(const Graph& g) {
  auto [lo, hi] = eccentricity_range(g);
  return lo < 0 ? ExtendedReal::undefined() : ExtendedReal::finite(hi);
}

ExtendedReal average_distance(const Graph& g) {
  int n = g.order();
  if (n < 2) return ExtendedReal::undefined();
  long long total = 0;
  for (int v = 0; v < n; ++v)
    for (int d : bfs_distances(g, v)) {
      if (d < 0) return ExtendedReal::undefined();
      total += d;
    }
  return ExtendedReal::finite(static_cast<double>(total) /
                              (static_cast<double>(n) * (n - 1)));
}

ExtendedReal girth(const Graph& g) {
  int best = INT_MAX;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1), parent(g.order(), -1);
    std::vector<int> queue{s};
    dist[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      for (int w : g.neighbors(u)) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u]) {
          // Non-tree edge closes a walk through s; shortest such walk over
          // all roots is the girth.
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  return best == INT_MAX ? ExtendedReal::pos_inf() : ExtendedReal::finite(best);
}

long long triangle_number(const Graph& g) {
  long long count = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u)) {
      if (v < u) continue;
      auto ru = g.row(u), rv = g.row(v);
      for (std::size_t w = 0; w < ru.size(); ++w)
        count += std::popcount(ru[w] & rv[w]);
    }
  return count / 3;  // each triangle counted once per edge
}

int matching_number(const Graph& g) {
  int n = g.order();
  if (n > 22) throw std::length_error("matching solver supports n <= 22");
  if (n == 0) return 0;
  auto masks = adjacency_masks64(g);
  std::vector<std::int8_t> memo(std::size_t(1) << n, -1);
  std::function<int(std::uint64_t)> best = [&](std::uint64_t alive) -> int {
    if (alive == 0) return 0;
    std::int8_t& slot = memo[alive];
    if (slot >= 0) return slot;
    int v = std::countr_zero(alive);
    std::uint64_t rest = alive & (alive - 1);  // drop v
    int value = best(rest);                    // v stays unmatched
    std::uint64_t partners = masks[v] & rest;
    while (partners) {
      int u = std::countr_zero(partners);
      partners &= partners - 1;
      value = std::max(value, 1 + best(rest & ~(std::uint64_t(1) << u)));
    }
    slot = static_cast<std::int8_t>(value);
    return value;
  };
  return best((std::size_t(1) << n) - 1);
}

namespace {

struct MisSolver {
  const std::vector<std::uint64_t>& adj;
  int best = 0;

  void run(std::uint64_t open, int chosen) {
    while (true) {
      if (chosen + std::popcount(open) <= best) return;
      if (open == 0) {
        best = std::max(best, chosen);
        return;
      }
      // One scan: apply a degree-0/1 reduction if possible, else find the
      // max-degree vertex to branch on.
      int branch_v = -1, branch_d = -1;
      std::uint64_t scan = open;
      bool reduced = false;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        std::uint64_t nb = adj[v] & open;
        int d = std::popcount(nb);
        if (d == 0) {  // isolated in the remainder: always take it
          open &= ~(std::uint64_t(1) << v);
          ++chosen;
          reduced = true;
          break;
        }
        if (d == 1) {  // degree one: taking v dominates taking its neighbor
          open &= ~((std::uint64_t(1) << v) | nb);
          ++chosen;
          reduced = true;
          break;
        }
        if (d > branch_d) {
          branch_d = d;
          branch_v = v;
        }
      }
      if (reduced) continue;
      run(open & ~((std::uint64_t(1) << branch_v) | adj[branch_v]), chosen + 1);
      open &= ~(std::uint64_t(1) << branch_v);  // exclude branch, iteratively
    }
  }
};

}  // namespace

int independence_number(const Graph& g) {
  int n = g.order();
  if (n > 64) throw std::length_error("independence solver supports n <= 64");
  if (n == 0) return 0;
  auto masks = adjacency_masks64(g);
  MisSolver solver{masks};
  solver.run(n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1, 0);
  return solver.best;
}

int annihilation_number(const Graph& g) {
  std::vector<int> d = g.degree_sequence_desc();
  std::sort(d.begin(), d.end());
  long long total = std::accumulate(d.begin(), d.end(), 0LL);
  long long prefix = 0;
  int k = 0;
  for (int i = 0; i < static_cast<int>(d.size()); ++i) {
    prefix += d[i];
    if (prefix <= total - prefix) k = i + 1;
    else break;
  }
  return k;
}

double fractional_independence_number(const Graph& g) {
  int n = g.order();
  if (n > 32) throw std::length_error("fractional independence solver supports n <= 32");
  // Half-integrality: the LP optimum is half the independence number of the
  // bipartite double cover.
  Graph cover(2 * n);
  for (auto [u, v] : edge_list(g)) {
    cover.add_edge(u, n + v);
    cover.add_edge(v, n + u);
  }
  return independence_number(cover) / 2.0;
}

int cvetkovic_bound(const Graph& g) {
  constexpr double kZeroTol = 1e-8;
  int nonneg = 0, nonpos = 0;
  for (double lam : adjacency_spectrum(g)) {
    if (lam >= -kZeroTol) ++nonneg;
    if (lam <= kZeroTol) ++nonpos;
  }
  return std::min(nonneg, nonpos);
}

int hansen_zheng_bound(const Graph& g) {
  long long n = g.order(), m = g.size();
  long long cap = n * n - n - 2 * m;
  int k = 0;
  while (static_cast<long long>(k + 1) * k <= cap) ++k;
  return k;
}

int residue(const Graph& g) {
  std::vector<int> d = g.degree_sequence_desc();
  while (!d.empty() && d[0] > 0) {
    int take = d[0];
    d.erase(d.begin());
    for (int i = 0; i < take; ++i) --d[i];  // graphical sequences never run short
    std::sort(d.rbegin(), d.rend());
  }
  return static_cast<int>(d.size());
}

namespace {

struct CriticalSearch {
  const std::vector<std::uint64_t>& adj;
  int n;
  int best_diff = INT_MIN;
  int best_size = 0;

  // Walks every independent set once, tracking |I| - |N(I)|.
  void run(int v, std::uint64_t in, std::uint64_t nbhd, int size) {
    if (v == n) {
      int diff = size - std::popcount(nbhd);
      if (diff > best_diff || (diff == best_diff && size > best_size)) {
        best_diff = diff;
        best_size = size;
      }
      return;
    }
    run(v + 1, in, nbhd, size);
    if ((adj[v] & in) == 0)
      run(v + 1, in | (std::uint64_t(1) << v), nbhd | adj[v], size + 1);
  }
};

}  // namespace

int critical_independence_number(const Graph& g) {
  int n = g.order();
  if (n > 20) throw std::length_error("critical independence solver supports n <= 20");
  if (n == 0) return 0;
  auto masks = adjacency_masks64(g);
  CriticalSearch search{masks, n};
  search.run(0, 0, 0, 0);
  return search.best_size;
}

ExtendedReal max_even_minus_even_horizontal(const Graph& g) {
  int n = g.order();
  int best = INT_MIN;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    std::vector<int> even;
    for (int u = 0; u < n; ++u) {
      if (dist[u] < 0) return ExtendedReal::undefined();
      if (dist[u] % 2 == 0) even.push_back(u);
    }
    int horizontal = 0;
    for (std::size_t i = 0; i < even.size(); ++i)
      for (std::size_t j = i + 1; j < even.size(); ++j)
        if (g.edge(even[i], even[j])) ++horizontal;
    best = std::max(best, static_cast<int>(even.size()) - horizontal);
  }
  return ExtendedReal::finite(best);
}

// ---- registry ---------------------------------------------------------------

namespace {

using Compute = std::function<InvariantValue(const Graph&)>;

InvariantValue exact_int(long long v) {
  return {ExtendedReal::finite(static_cast<double>(v)), true, 0.0};
}

InvariantValue exact_er(ExtendedReal v) { return {v, true, 0.0}; }

InvariantDef def(std::string name, Compute fn) {
  InvariantDef d;
  d.name = std::move(name);
  // Preconditions (connectivity, minimum order) are enforced by the wrapper
  // installed in invariant_registry(), so `fn` sees only valid inputs.
  d.compute = std::move(fn);
  return d;
}

}  // namespace

const std::vector<InvariantDef>& invariant_registry() {
  static const std::vector<InvariantDef> registry = [] {
    std::vector<InvariantDef> defs;
    auto add = [&](InvariantDef d) { defs.push_back(std::move(d)); };

    add(def("order", [](const Graph& g) { return exact_int(graph_order(g)); }));
    add(def("size", [](const Graph& g) { return exact_int(graph_size(g)); }));
    add(def("degree_sum", [](const Graph& g) { return exact_int(degree_sum(g)); }));
    add(def("max_degree", [](const Graph& g) { return exact_int(max_degree(g)); }));

    {
      InvariantDef d = def("radius", [](const Graph& g) { return exact_er(radius(g)); });
      d.requires_connected = true;
      add(d);
    }
    {
      InvariantDef d = def("diameter", [](const Graph& g) { return exact_er(diameter(g)); });
      d.requires_connected = true;
      add(d);
    }
    {
      InvariantDef d = def("average_distance",
                           [](const Graph& g) { return exact_er(average_distance(g)); });
      d.requires_connected = true;
      d.min_order = 2;
      d.integral = false;
      add(d);
    }
    add(def("girth", [](const Graph& g) { return exact_er(girth(g)); }));
    add(def("triangle_number",
            [](const Graph& g) { return exact_int(triangle_number(g)); }));
    {
      InvariantDef d = def("matching_number",
                           [](const Graph& g) { return exact_int(matching_number(g)); });
      d.max_practical_order = 20;
      add(d);
    }
    {
      InvariantDef d = def("residue", [](const Graph& g) { return exact_int(residue(g)); });
      add(d);
    }
    add(def("annihilation_number",
            [](const Graph& g) { return exact_int(annihilation_number(g)); }));
    {
      InvariantDef d = def("independence_number",
                           [](const Graph& g) { return exact_int(independence_number(g)); });
      d.max_practical_order = 40;
      add(d);
    }
    {
      InvariantDef d =
          def("fractional_independence_number", [](const Graph& g) {
            return InvariantValue{
                ExtendedReal::finite(fractional_independence_number(g)), true, 0.0};
          });
      d.integral = false;
      d.max_practical_order = 20;
      add(d);
    }
    {
      InvariantDef d = def("lovasz_theta", [](const Graph& g) {
        ThetaResult r = lovasz_theta(g);
        return InvariantValue{ExtendedReal::finite(r.value), false, r.tolerance};
      });
      d.integral = false;
      d.requires_connected = true;
      d.max_practical_order = 12;
      d.approximate = true;
      d.upper_feasible = true;
      add(d);
    }
    add(def("cvetkovic_bound",
            [](const Graph& g) { return exact_int(cvetkovic_bound(g)); }));
    {
      InvariantDef d = def("hansen_zheng_bound",
                           [](const Graph& g) { return exact_int(hansen_zheng_bound(g)); });
      d.requires_connected = true;
      add(d);
    }
    {
      InvariantDef d =
          def("critical_independence_number",
              [](const Graph& g) { return exact_int(critical_independence_number(g)); });
      d.max_practical_order = 20;
      add(d);
    }
    {
      InvariantDef d = def("max_even_minus_even_horizontal", [](const Graph& g) {
        return exact_er(max_even_minus_even_horizontal(g));
      });
      d.requires_connected = true;
      add(d);
    }

    // Wrap every compute with the shared precondition checks.
    for (InvariantDef& d : defs) {
      Compute inner = std::move(d.compute);
      bool needs_conn = d.requires_connected;
      int min_order = d.min_order;
      d.compute = [inner, needs_conn, min_order](const Graph& g) -> InvariantValue {
        if (g.order() < min_order) return {ExtendedReal::undefined(), true, 0.0};
        if (needs_conn && !is_connected(g)) return {ExtendedReal::undefined(), true, 0.0};
        return inner(g);
      };
    }
    return defs;
  }();
  return registry;
}

const InvariantDef* find_invariant(std::string_view name) {
  for (const auto& d : invariant_registry())
    if (d.name == name) return &d;
  return nullptr;
}

int invariant_id(std::string_view name) {
  const auto& reg = invariant_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    if (reg[i].name == name) return static_cast<int>(i);
  return -1;
}

std::vector<InvariantSymbol> standard_symbols() {
  std::vector<InvariantSymbol> out;
  const auto& reg = invariant_registry();
  for (std::size_t i = 0; i < reg.size(); ++i)
    out.push_back({static_cast<int>(i), reg[i].name});
  return out;
}

SymbolTable standard_symbol_table() {
  SymbolTable t;
  for (auto& s : standard_symbols()) t.add(std::move(s));
  return t;
}

}  // namespace gconj
