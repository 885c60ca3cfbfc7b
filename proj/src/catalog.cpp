#include "gconj/catalog.hpp"

#include <cctype>
#include <optional>
#include <stdexcept>

namespace gconj {

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  Graph g(n, "p" + std::to_string(n));
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  Graph g(n, "c" + std::to_string(n));
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  Graph g(n, "k" + std::to_string(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be nonempty");
  Graph g(a + b, "k" + std::to_string(a) + "_" + std::to_string(b));
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph star_graph(int leaves) {
  Graph g = complete_bipartite(1, leaves);
  return g;
}

Graph petersen_graph() {
  // Vertices = 2-subsets of {0..4}; edges join disjoint subsets.
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  Graph g(10, "petersen");
  for (std::size_t i = 0; i < subsets.size(); ++i)
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      auto [a, b] = subsets[i];
      auto [c, d] = subsets[j];
      if (a != c && a != d && b != c && b != d) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return g;
}

Graph ciliate_graph(int c, int q) {
  if (c < 2 || c % 2 != 0) throw std::invalid_argument("ciliate needs an even cycle length >= 2");
  if (q < 0) throw std::invalid_argument("ciliate needs q >= 0");
  Graph g(c * (1 + q), "ciliate_" + std::to_string(c) + "_" + std::to_string(q));
  if (c == 2) {
    g.add_edge(0, 1);  // a 2-cycle degenerates to one edge
  } else {
    for (int v = 0; v < c; ++v) g.add_edge(v, (v + 1) % c);
  }
  // Pendant path of q vertices off each cycle vertex, laid out after the cycle.
  for (int v = 0; v < c; ++v) {
    int prev = v;
    for (int k = 0; k < q; ++k) {
      int node = c + v * q + k;
      g.add_edge(prev, node);
      prev = node;
    }
  }
  return g;
}

const std::vector<Graph>& catalog() {
  static const std::vector<Graph> entries = {
      complete_graph(5),        // k5
      cycle_graph(5),           // c5
      complete_bipartite(2, 3), // k2_3
      petersen_graph(),
      path_graph(5),
      cycle_graph(4),
      cycle_graph(6),
      cycle_graph(7),
      complete_graph(4),
      complete_bipartite(3, 3),
      star_graph(4),            // k1_4
      ciliate_graph(4, 1),
  };
  return entries;
}

namespace {

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    v = v * 10 + (c - '0');
    if (v > 1000000) return std::nullopt;
  }
  return v;
}

}  // namespace

Graph catalog_graph(std::string_view name) {
  for (const Graph& g : catalog())
    if (g.name() == name) return g;
  if (name == "petersen") return petersen_graph();

  // Parametric families: p<n>, c<n>, k<n>, k<a>_<b>, ciliate_<c>_<q>.
  if (name.rfind("ciliate_", 0) == 0) {
    std::string_view rest = name.substr(8);
    auto us = rest.find('_');
    if (us != std::string_view::npos) {
      auto c = parse_int(rest.substr(0, us)), q = parse_int(rest.substr(us + 1));
      if (c && q) return ciliate_graph(*c, *q);
    }
  } else if (name.size() >= 2 && (name[0] == 'p' || name[0] == 'c' || name[0] == 'k')) {
    std::string_view rest = name.substr(1);
    auto us = rest.find('_');
    if (name[0] == 'k' && us != std::string_view::npos) {
      auto a = parse_int(rest.substr(0, us)), b = parse_int(rest.substr(us + 1));
      if (a && b) return complete_bipartite(*a, *b);
    } else if (auto n = parse_int(rest)) {
      if (name[0] == 'p') return path_graph(*n);
      if (name[0] == 'c') return cycle_graph(*n);
      return complete_graph(*n);
    }
  }
  throw std::invalid_argument("unknown catalog graph: " + std::string(name));
}

}  // namespace gconj
