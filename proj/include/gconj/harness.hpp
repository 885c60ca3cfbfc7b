#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gconj/corpus.hpp"
#include "gconj/graph.hpp"
#include "gconj/value_table.hpp"

namespace gconj {

/// Verdict for one entry on one graph. A graph the entry's preconditions
/// exclude (connectivity, minimum order) is Skipped; otherwise an Undefined
/// evaluation counts as a failure. Approximate inputs (theta) are widened to
/// their tolerance band, so Holds is a certificate, not a point comparison.
enum class EntryVerdict { Holds, Fails, Skipped };

EntryVerdict check_entry_on(const CorpusEntry& entry, const Graph& g,
                            ValueTable* table = nullptr);

struct CheckOutcome {
  std::optional<Graph> counterexample;  // engaged iff the entry was violated
  std::string counterexample_g6;
  long long checked = 0;  // graphs that had to hold (and did, up to a violation)
  long long skipped = 0;  // graphs excluded by preconditions
  std::uint64_t seed = 0; // fuzz runs record the seed they used
};

/// Checks the entry on every generated graph of order 1..max_order
/// (max_order <= 8), in generator order; the first violation wins. With
/// threads > 1 the verdicts are computed in parallel and the value table,
/// if any, is left untouched.
CheckOutcome exhaustive_check(const CorpusEntry& entry, int max_order,
                              bool connected_only, ValueTable* table = nullptr,
                              int threads = 1);

enum class FuzzModel { ErdosRenyi, Regular, Bipartite };

/// Accepts "er", "regular", "bipartite"; throws std::invalid_argument.
FuzzModel fuzz_model_from_name(std::string_view name);

/// Seeded random sweep over the given models; bit-reproducible for a fixed
/// (models, trials, seed). Graph orders are drawn up to `max_order` further
/// capped by the practical limits of the invariants the entry mentions.
/// trials must be >= 1.
CheckOutcome fuzz_check(const CorpusEntry& entry,
                        const std::vector<FuzzModel>& models, int trials,
                        std::uint64_t seed, int max_order = 40,
                        ValueTable* table = nullptr);

}  // namespace gconj
