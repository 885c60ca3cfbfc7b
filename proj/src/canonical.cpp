#include "gconj/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "gconj/graph6.hpp"

namespace gconj {

namespace {

// Color refinement: repeatedly split color classes by the multiset of
// neighbor colors. The class ids are ranks of sorted signatures, so they
// do not depend on the input labeling.
std::vector<int> refine_colors(const std::vector<std::uint32_t>& adj, int n) {
  std::vector<int> color(n, 0);
  int classes = 1;
  for (int round = 0; round < n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sigs(n);  // signature -> vertex
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig{color[v]};
      std::vector<int> nb;
      for (int u = 0; u < n; ++u)
        if ((adj[v] >> u) & 1) nb.push_back(color[u]);
      std::sort(nb.begin(), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      sigs[v] = {std::move(sig), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [sig, v] : sorted)
      rank.emplace(sig, static_cast<int>(rank.size()));
    int new_classes = static_cast<int>(rank.size());
    for (int v = 0; v < n; ++v) color[v] = rank[sigs[v].first];
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return color;
}

struct CanonicalSearch {
  int n;
  const std::vector<std::uint32_t>& adj;
  std::vector<std::uint32_t> twin;     // twin[v]: vertices interchangeable with v
  std::vector<int> block_color;        // color required at each position
  std::vector<std::uint16_t> cur_cols; // columns of the current partial labeling
  std::vector<std::uint16_t> best_cols;
  std::vector<int> cur_perm, best_perm;  // position -> original vertex
  bool have_best = false;
  std::uint32_t used = 0;

  CanonicalSearch(int n, const std::vector<std::uint32_t>& adj,
                  const std::vector<int>& color)
      : n(n), adj(adj), twin(n), cur_cols(n), best_cols(n), cur_perm(n), best_perm(n) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        std::uint32_t diff = adj[u] ^ adj[v];
        diff &= ~((1u << u) | (1u << v));
        if (u != v && diff == 0) twin[u] |= 1u << v;
      }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return color[a] < color[b]; });
    block_color.resize(n);
    for (int p = 0; p < n; ++p) block_color[p] = color[order[p]];
    vertex_color = color;
  }

  std::vector<int> vertex_color;

  std::uint64_t best_version = 0;

  // prefix_eq: the first `pos` columns equal best's. It can become true
  // mid-loop when a descendant replaces best, because the new best then
  // runs through this very prefix.
  void place(int pos, bool prefix_eq) {
    if (pos == n) {
      if (!have_best || cur_cols < best_cols) {
        best_cols = cur_cols;
        best_perm = cur_perm;
        have_best = true;
        ++best_version;
      }
      return;
    }
    std::uint32_t tried = 0;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      if (vertex_color[v] != block_color[pos]) continue;
      if (twin[v] & tried) continue;  // an interchangeable vertex was tried
      tried |= 1u << v;

      std::uint16_t col = 0;
      for (int i = 0; i < pos; ++i)
        col = static_cast<std::uint16_t>((col << 1) | ((adj[v] >> cur_perm[i]) & 1));
      bool child_eq = false;
      if (prefix_eq && have_best) {
        if (col > best_cols[pos]) continue;  // every completion would be larger
        child_eq = (col == best_cols[pos]);
      }
      cur_cols[pos] = col;
      cur_perm[pos] = v;
      used |= 1u << v;
      std::uint64_t v0 = best_version;
      place(pos + 1, child_eq);
      used &= ~(1u << v);
      if (best_version != v0) prefix_eq = true;
    }
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  int n = g.order();
  if (n > 16) throw std::length_error("canonical labeling supports n <= 16");
  if (n == 0) return g;

  std::vector<std::uint32_t> adj(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) adj[v] |= 1u << u;

  std::vector<int> color = refine_colors(adj, n);
  CanonicalSearch search(n, adj, color);
  search.place(0, true);

  // best_perm maps new position -> old vertex; relabeled() wants old -> new.
  std::vector<int> old_to_new(n);
  for (int p = 0; p < n; ++p) old_to_new[search.best_perm[p]] = p;
  return g.relabeled(old_to_new);
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string table_key(const Graph& g) {
  return g.order() <= 16 ? canonical_form(g) : write_graph6(g);
}

}  // namespace gconj
