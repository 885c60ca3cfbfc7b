#include "gconj/harness.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "gconj/gen.hpp"
#include "gconj/graph6.hpp"
#include "gconj/interval.hpp"
#include "gconj/invariants.hpp"
#include "gconj/random_graphs.hpp"
#include "gconj/rng.hpp"

namespace gconj {

namespace {

// Parsed entry plus everything needed to judge one graph without re-parsing.
struct EntryChecker {
  const CorpusEntry& entry;
  Expression rhs;
  std::vector<int> symbol_ids;            // ids used by rhs, ascending
  const InvariantDef* target = nullptr;

  explicit EntryChecker(const CorpusEntry& e)
      : entry(e), rhs(entry_expression(e)), symbol_ids(rhs.symbol_ids()) {
    target = find_invariant(e.target);
    if (target == nullptr)
      throw std::invalid_argument("unknown target invariant: " + e.target);
  }

  InvariantValue cell(const Graph& g, const InvariantDef& def,
                      ValueTable* table) const {
    if (table != nullptr) return table->ensure(g, def.name);
    return def.compute(g);
  }

  EntryVerdict verdict(const Graph& g, ValueTable* table) const {
    if (g.order() < entry.min_order) return EntryVerdict::Skipped;
    if (entry.connected_only && !is_connected(g)) return EntryVerdict::Skipped;

    InvariantValue alpha = cell(g, *target, table);
    if (alpha.value.is_undefined()) return EntryVerdict::Fails;

    const auto& registry = invariant_registry();
    std::vector<ERange> env;
    if (!symbol_ids.empty())
      env.assign(static_cast<std::size_t>(symbol_ids.back()) + 1,
                 ERange::nowhere());
    for (int id : symbol_ids) {
      const InvariantDef& def = registry[static_cast<std::size_t>(id)];
      InvariantValue v = cell(g, def, table);
      if (v.value.is_undefined()) continue;  // stays nowhere
      if (v.exact || v.tolerance <= 0.0) {
        env[static_cast<std::size_t>(id)] = ERange::point(v.value);
        continue;
      }
      ExtendedReal lo = ExtendedReal::finite(v.value.raw() - v.tolerance);
      ExtendedReal hi = def.upper_feasible
                            ? v.value
                            : ExtendedReal::finite(v.value.raw() + v.tolerance);
      env[static_cast<std::size_t>(id)] = ERange::band(lo, hi);
    }

    ERange bound = evaluate_range(rhs, env);
    if (bound.undef_possible || !bound.defined_possible)
      return EntryVerdict::Fails;
    bool holds = entry.direction == Direction::Upper
                     ? alpha.value.raw() <= bound.lo.raw()
                     : alpha.value.raw() >= bound.hi.raw();
    return holds ? EntryVerdict::Holds : EntryVerdict::Fails;
  }
};

void note(CheckOutcome& out, EntryVerdict v) {
  if (v == EntryVerdict::Skipped)
    ++out.skipped;
  else
    ++out.checked;
}

}  // namespace

EntryVerdict check_entry_on(const CorpusEntry& entry, const Graph& g,
                            ValueTable* table) {
  return EntryChecker(entry).verdict(g, table);
}

CheckOutcome exhaustive_check(const CorpusEntry& entry, int max_order,
                              bool connected_only, ValueTable* table,
                              int threads) {
  if (max_order < 1 || max_order > 8)
    throw std::invalid_argument("exhaustive check supports orders 1..8");
  EntryChecker checker(entry);
  CheckOutcome out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<Graph> connected;
    if (connected_only) connected = connected_graphs(n);
    const std::vector<Graph>& graphs = connected_only ? connected : all_graphs(n);

    std::vector<EntryVerdict> verdicts(graphs.size());
    if (threads > 1 && graphs.size() > 1) {
      // Parallel verdicts never touch the shared table; results merge in
      // generator order below so the first violation is deterministic.
      int workers = std::min<int>(threads, static_cast<int>(graphs.size()));
      std::vector<std::thread> pool;
      pool.reserve(static_cast<std::size_t>(workers));
      std::atomic<std::size_t> cursor{0};
      for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
          for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) return;
            verdicts[i] = checker.verdict(graphs[i], nullptr);
          }
        });
      }
      for (auto& t : pool) t.join();
    } else {
      for (std::size_t i = 0; i < graphs.size(); ++i)
        verdicts[i] = checker.verdict(graphs[i], table);
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
      note(out, verdicts[i]);
      if (verdicts[i] == EntryVerdict::Fails) {
        out.counterexample = graphs[i];
        out.counterexample_g6 = write_graph6(graphs[i]);
        return out;
      }
    }
  }
  return out;
}

FuzzModel fuzz_model_from_name(std::string_view name) {
  if (name == "er") return FuzzModel::ErdosRenyi;
  if (name == "regular") return FuzzModel::Regular;
  if (name == "bipartite") return FuzzModel::Bipartite;
  throw std::invalid_argument("unknown graph model: " + std::string(name));
}

CheckOutcome fuzz_check(const CorpusEntry& entry,
                        const std::vector<FuzzModel>& models, int trials,
                        std::uint64_t seed, int max_order, ValueTable* table) {
  if (models.empty()) throw std::invalid_argument("no graph models given");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");

  EntryChecker checker(entry);

  // Keep random orders inside the practical range of every invariant the
  // entry mentions, so a sweep never stalls on an oversized exact solve.
  const auto& registry = invariant_registry();
  int cap = std::max(2, max_order);
  auto apply_cap = [&](const InvariantDef& def) {
    if (def.max_practical_order > 0)
      cap = std::min(cap, def.max_practical_order);
  };
  apply_cap(*checker.target);
  for (int id : checker.symbol_ids)
    apply_cap(registry[static_cast<std::size_t>(id)]);
  int lo = std::max(1, entry.min_order);
  cap = std::max(cap, lo);

  Rng rng(seed);
  CheckOutcome out;
  out.seed = seed;
  for (int t = 0; t < trials; ++t) {
    FuzzModel model =
        models[static_cast<std::size_t>(rng.uniform_int(
            0, static_cast<int>(models.size()) - 1))];
    int n = rng.uniform_int(lo, cap);
    Graph g(0);
    switch (model) {
      case FuzzModel::ErdosRenyi:
        g = random_er(n, rng.uniform01(), rng);
        break;
      case FuzzModel::Regular: {
        int d = n <= 1 ? 0 : rng.uniform_int(1, std::min(6, n - 1));
        if ((n * d) % 2 != 0) d = (d + 1 <= n - 1) ? d + 1 : d - 1;
        try {
          g = random_regular(n, d, rng);
        } catch (const std::runtime_error&) {
          ++out.skipped;  // pairing model gave up; burn the trial
          continue;
        }
        break;
      }
      case FuzzModel::Bipartite:
        if (n < 2) {
          g = Graph(n);  // a lone vertex; both sides need a vertex otherwise
        } else {
          g = random_bipartite((n + 1) / 2, n / 2, rng.uniform01(), rng);
        }
        break;
    }
    EntryVerdict v = checker.verdict(g, table);
    note(out, v);
    if (v == EntryVerdict::Fails) {
      out.counterexample = g;
      out.counterexample_g6 = write_graph6(g);
      return out;
    }
  }
  return out;
}

}  // namespace gconj
