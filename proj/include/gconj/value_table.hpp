#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "gconj/extended_real.hpp"
#include "gconj/graph.hpp"
#include "gconj/invariants.hpp"

namespace gconj {

/// Cache of invariant values keyed by (graph key, invariant name). The graph
/// key is the canonical form where available, so isomorphic graphs share a
/// row and nothing is recomputed. Cells for invariant names this build does
/// not know are carried verbatim so external databases round-trip.
class ValueTable {
public:
  struct Cell {
    ExtendedReal value;
    bool exact = true;
    double tolerance = 0.0;
    std::string tool;  // optional provenance tag from the store file
  };

  /// Cached value of `invariant` on g, computing and caching on a miss.
  /// Throws std::invalid_argument for names missing from the registry.
  InvariantValue ensure(const Graph& g, std::string_view invariant);

  const Cell* find(std::string_view graph_key, std::string_view invariant) const;
  void put(std::string graph_key, std::string invariant, Cell cell);

  std::size_t size() const;  // number of cells
  bool empty() const { return rows_.empty(); }

  /// Deterministic traversal (rows and columns in lexicographic order).
  void for_each(const std::function<void(const std::string& graph_key,
                                         const std::string& invariant,
                                         const Cell& cell)>& fn) const;

private:
  std::map<std::string, std::map<std::string, Cell>> rows_;
};

}  // namespace gconj
