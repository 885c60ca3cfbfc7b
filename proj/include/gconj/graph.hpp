#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gconj {

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// Self-loops and parallel edges are rejected by construction.
class Graph {
public:
  explicit Graph(int n, std::string name = "");
  Graph() : Graph(0) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                          std::string name = "");

  int order() const { return n_; }
  int size() const;  // edge count

  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  bool edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (bits_[static_cast<std::size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1;
  }

  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<int> degree_sequence_desc() const;

  /// Adjacency row of v as words (bit i of word w = vertex 64w+i).
  std::span<const std::uint64_t> row(int v) const {
    check_vertex(v);
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Labeled equality: same order and identical adjacency.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  /// Copy with vertices relabeled: vertex i of the result is perm[i] of
  /// this graph.
  Graph relabeled(const std::vector<int>& perm) const;

private:
  void check_vertex(int v) const;
  int n_;
  int words_;
  std::vector<std::uint64_t> bits_;
  std::string name_;
};

/// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// All edges as (u, v) with u < v, lexicographic.
std::vector<std::pair<int, int>> edge_list(const Graph& g);

/// Single-word adjacency masks for fast set algorithms; requires n <= 64.
std::vector<std::uint64_t> adjacency_masks64(const Graph& g);

}  // namespace gconj
