#pragma once

#include <string>
#include <string_view>

#include "gconj/graph.hpp"
#include "gconj/invariants.hpp"
#include "gconj/value_table.hpp"

namespace gconj {

/// On-disk invariant database: a versioned header line, then one record per
/// line, `graph6,invariant,value,exactness[,tool]`, where value is `undef`,
/// `inf`, `-inf`, or a decimal, and exactness is `exact` or `approx:<tol>`.
/// Comma never appears in graph6 or invariant names, so the format needs no
/// quoting. Blank lines and `#` comment lines are ignored.
inline constexpr std::string_view kStoreHeader = "# gconj-store v1";

/// Reads a store file into a table. Graph keys of parseable order are
/// canonicalized so isomorphic records merge; duplicate (graph, invariant)
/// pairs resolve last-write-wins. A missing file yields an empty table.
/// Throws std::runtime_error as "path:LINE: reason" on a malformed record.
ValueTable load_table(const std::string& path);

/// Rewrites the file atomically under an exclusive lock: header first, then
/// every cell in deterministic (graph key, invariant) order.
void save_table(const ValueTable& table, const std::string& path);

/// Append-only handle on a store file. Holds an exclusive flock for its
/// lifetime (single writer, concurrent readers of the last saved state);
/// creates the file with a header when absent or empty.
class StoreWriter {
public:
  explicit StoreWriter(const std::string& path);
  ~StoreWriter();
  StoreWriter(const StoreWriter&) = delete;
  StoreWriter& operator=(const StoreWriter&) = delete;

  void append(std::string_view graph_key, std::string_view invariant,
              const ValueTable::Cell& cell);

private:
  int fd_ = -1;
  std::string path_;
};

/// Encodes a cell value the way the store writes it.
std::string encode_store_value(ExtendedReal v);

/// Table lookup that records cache misses: returns the cached or freshly
/// computed value, appending newly computed cells to `log` when given.
InvariantValue ensure_logged(ValueTable& table, const Graph& g,
                             std::string_view invariant,
                             StoreWriter* log = nullptr);

}  // namespace gconj
