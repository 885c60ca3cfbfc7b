#include "gconj/gen.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "gconj/canonical.hpp"
#include "gconj/graph6.hpp"

namespace gconj {

namespace {

std::vector<Graph> build_level(const std::vector<Graph>& prev, int n) {
  // Every graph on n vertices is some (n-1)-vertex graph plus one vertex
  // with an arbitrary neighborhood, so augmenting the previous level and
  // deduplicating by canonical form covers everything.
  std::map<std::string, Graph> reps;
  for (const Graph& parent : prev) {
    for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
      Graph h(n);
      for (auto [u, v] : edge_list(parent)) h.add_edge(u, v);
      for (int v = 0; v < n - 1; ++v)
        if ((mask >> v) & 1) h.add_edge(v, n - 1);
      Graph canon = canonical_graph(h);
      reps.emplace(write_graph6(canon), std::move(canon));
    }
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (auto& [key, g] : reps) out.push_back(std::move(g));
  return out;  // map iteration is already sorted by canonical form
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
  if (n < 1 || n > 8) throw std::out_of_range("graph generation supports 1 <= n <= 8");
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache[1] = {Graph(1)};
  for (int k = 2; k <= n; ++k)
    if (!cache.count(k)) cache[k] = build_level(cache[k - 1], k);
  return cache[n];
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

}  // namespace gconj
