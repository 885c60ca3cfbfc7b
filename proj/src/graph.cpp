#include "gconj/graph.hpp"

#include <bit>
#include <deque>
#include <stdexcept>
#include <algorithm>

namespace gconj {

Graph::Graph(int n, std::string name)
    : n_(n), words_(n > 0 ? (n + 63) / 64 : 1), name_(std::move(name)) {
  if (n < 0) throw std::invalid_argument("negative graph order");
  bits_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                        std::string name) {
  Graph g(n, std::move(name));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw std::invalid_argument("self-loop rejected");
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] |= 1ULL << (v & 63);
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] |= 1ULL << (u & 63);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] &= ~(1ULL << (v & 63));
  bits_[static_cast<std::size_t>(v) * words_ + (u >> 6)] &= ~(1ULL << (u & 63));
}

int Graph::size() const {
  long long total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return static_cast<int>(total / 2);
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(64 * w + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence_desc() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw std::invalid_argument("permutation size mismatch");
  Graph out(n_, name_);
  for (int u = 0; u < n_; ++u)
    for (int v : neighbors(u))
      if (u < v) out.add_edge(perm[u], perm[v]);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{src};
  dist[src] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u))
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto dist = bfs_distances(g, 0);
  for (int d : dist)
    if (d < 0) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::uint64_t> adjacency_masks64(const Graph& g) {
  if (g.order() > 64) throw std::length_error("adjacency_masks64 needs n <= 64");
  std::vector<std::uint64_t> masks(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) masks[v] = g.row(v)[0];
  return masks;
}

}  // namespace gconj
