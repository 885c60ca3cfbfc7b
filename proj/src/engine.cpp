#include "gconj/engine.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "gconj/canonical.hpp"
#include "gconj/expr_enum.hpp"

namespace gconj {

namespace {

// Relative tolerance treating two candidate values as equal (ties).
constexpr double kTieRelTol = 1e-9;

void collect_symbols(const Expression& e, std::vector<InvariantSymbol>& out) {
  switch (e.kind()) {
    case Expression::Kind::Symbol:
      out.push_back(e.sym());
      return;
    case Expression::Kind::Constant:
      return;
    case Expression::Kind::Unary:
      collect_symbols(e.left(), out);
      return;
    case Expression::Kind::Binary:
      collect_symbols(e.left(), out);
      collect_symbols(e.right(), out);
      return;
  }
}

// Shared evaluation state for one spec: per-object environments (indexed by
// symbol id and by pool position), target values, and per-symbol tolerances.
struct EvalContext {
  const TargetSpec& spec;
  std::vector<ExtendedReal> alpha;                 // target value per object
  std::vector<std::vector<ExtendedReal>> env_id;   // per object, by symbol id
  std::vector<std::vector<ExtendedReal>> env_pool; // per object, by pool index
  std::vector<double> tol_by_id;                   // >0 for approximate symbols

  EvalContext(const TargetSpec& s, ValueTable& table) : spec(s) {
    std::set<int> ids{spec.target.id};
    for (const auto& sym : spec.pool)
      if (!ids.insert(sym.id).second)
        throw std::invalid_argument("pool symbol ids collide with each other or the target");

    std::vector<InvariantSymbol> extra;  // symbols theory uses beyond the pool
    for (const Expression& t : spec.theory) collect_symbols(t, extra);

    int max_id = spec.target.id;
    for (const auto& sym : spec.pool) max_id = std::max(max_id, sym.id);
    for (const auto& sym : extra) max_id = std::max(max_id, sym.id);
    tol_by_id.assign(max_id + 1, 0.0);

    std::size_t n = spec.objects.size();
    alpha.resize(n);
    env_id.resize(n);
    env_pool.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const Graph& g = spec.objects[i];
      alpha[i] = table.ensure(g, spec.target.name).value;
      env_id[i].assign(max_id + 1, ExtendedReal::undefined());
      env_pool[i].resize(spec.pool.size());
      for (std::size_t p = 0; p < spec.pool.size(); ++p) {
        InvariantValue v = table.ensure(g, spec.pool[p].name);
        env_id[i][spec.pool[p].id] = v.value;
        env_pool[i][p] = v.value;
        if (!v.exact) tol_by_id[spec.pool[p].id] = std::max(tol_by_id[spec.pool[p].id], v.tolerance);
      }
      for (const auto& sym : extra) {
        if (!env_id[i][sym.id].is_undefined()) continue;  // already a pool symbol
        InvariantValue v = table.ensure(g, sym.name);
        env_id[i][sym.id] = v.value;
        if (!v.exact) tol_by_id[sym.id] = std::max(tol_by_id[sym.id], v.tolerance);
      }
    }
  }

  std::vector<ExtendedReal> row_of(const Expression& e) const {
    std::vector<ExtendedReal> row(spec.objects.size());
    for (std::size_t i = 0; i < row.size(); ++i) row[i] = e.evaluate(env_id[i]);
    return row;
  }

  // How much a candidate must win by to count as beating this expression.
  double guard_of(const Expression& e) const {
    double guard = 0.0;
    for (int id : e.symbol_ids())
      if (id >= 0 && static_cast<std::size_t>(id) < tol_by_id.size())
        guard = std::max(guard, tol_by_id[id]);
    return guard;
  }

  bool row_true(const std::vector<ExtendedReal>& row) const {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].is_undefined() || alpha[i].is_undefined()) return false;
      bool holds = spec.direction == Direction::Upper
                       ? row[i].raw() >= alpha[i].raw()
                       : row[i].raw() <= alpha[i].raw();
      if (!holds) return false;
    }
    return true;
  }
};

// Candidate value `cand` strictly beats bound value `bound` at one object.
bool beats(Direction d, const ExtendedReal& cand, const ExtendedReal& bound,
           double guard) {
  if (bound.is_undefined()) return true;  // a silent bound can't block
  if (cand.is_undefined()) return false;
  if (guard > 0.0) {
    return d == Direction::Upper ? cand.raw() < bound.raw() - guard
                                 : cand.raw() > bound.raw() + guard;
  }
  if (defined_close(cand, bound, kTieRelTol)) return false;
  return d == Direction::Upper ? cand.raw() < bound.raw()
                               : cand.raw() > bound.raw();
}

bool row_significant(Direction d, const std::vector<ExtendedReal>& cand,
                     const std::vector<std::vector<ExtendedReal>>& bound_rows,
                     const std::vector<double>& bound_guards) {
  for (std::size_t i = 0; i < cand.size(); ++i) {
    bool all_beaten = true;
    for (std::size_t b = 0; b < bound_rows.size() && all_beaten; ++b)
      all_beaten = beats(d, cand[i], bound_rows[b][i], bound_guards[b]);
    if (all_beaten) return true;
  }
  return false;
}

// Index of the strict best (earliest on ties) per object; -1 if none defined.
std::vector<int> owners(Direction d,
                        const std::vector<std::vector<ExtendedReal>>& rows,
                        std::size_t n_objects) {
  std::vector<int> out(n_objects, -1);
  for (std::size_t i = 0; i < n_objects; ++i) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const ExtendedReal& v = rows[r][i];
      if (v.is_undefined()) continue;
      if (out[i] < 0) {
        out[i] = static_cast<int>(r);
        continue;
      }
      const ExtendedReal& cur = rows[out[i]][i];
      if (defined_close(v, cur, kTieRelTol)) continue;  // tie: earlier stays
      bool better = d == Direction::Upper ? v.raw() < cur.raw() : v.raw() > cur.raw();
      if (better) out[i] = static_cast<int>(r);
    }
  }
  return out;
}

}  // namespace

std::string conjecture_text(const InvariantSymbol& target, Direction direction,
                            const Expression& rhs) {
  return target.name + "(x) " + direction_text(direction) + " " + rhs.render();
}

std::string conjecture_text(const Conjecture& c) {
  return conjecture_text(c.target, c.direction, c.expression);
}

bool truth_check(const Expression& e, const TargetSpec& spec, ValueTable& table) {
  EvalContext ctx(spec, table);
  // The context only resolves pool/theory/target symbols; anything else in a
  // hand-built expression evaluates Undefined, which correctly fails truth.
  return ctx.row_true(ctx.row_of(e));
}

bool significance_check(const Expression& e, const std::vector<Conjecture>& kept,
                        const TargetSpec& spec, ValueTable& table) {
  EvalContext ctx(spec, table);
  std::vector<std::vector<ExtendedReal>> bound_rows;
  std::vector<double> bound_guards;
  for (const Conjecture& c : kept) {
    bound_rows.push_back(ctx.row_of(c.expression));
    bound_guards.push_back(ctx.guard_of(c.expression));
  }
  for (const Expression& t : spec.theory) {
    bound_rows.push_back(ctx.row_of(t));
    bound_guards.push_back(ctx.guard_of(t));
  }
  return row_significant(spec.direction, ctx.row_of(e), bound_rows, bound_guards);
}

std::vector<Conjecture> prune_dominated(std::vector<Conjecture> kept,
                                        const TargetSpec& spec, ValueTable& table) {
  if (kept.empty() || spec.objects.empty()) return kept;
  EvalContext ctx(spec, table);
  std::vector<std::vector<ExtendedReal>> rows;
  for (const Conjecture& c : kept) rows.push_back(ctx.row_of(c.expression));
  std::vector<int> own = owners(spec.direction, rows, spec.objects.size());
  std::vector<char> keep(kept.size(), 0);
  for (int o : own)
    if (o >= 0) keep[o] = 1;
  std::vector<Conjecture> out;
  for (std::size_t i = 0; i < kept.size(); ++i)
    if (keep[i]) out.push_back(std::move(kept[i]));
  return out;
}

RunReport run(const TargetSpec& spec, ValueTable& table) {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  auto elapsed_ms = [&] {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  };

  RunReport report;
  if (spec.pool.empty() && spec.constants.empty()) return report;

  EvalContext ctx(spec, table);

  std::vector<std::vector<ExtendedReal>> bound_rows;  // kept ++ theory rows
  std::vector<double> bound_guards;
  std::size_t n_kept = 0;  // prefix of bound_rows owned by kept conjectures
  for (const Expression& t : spec.theory) {
    bound_rows.push_back(ctx.row_of(t));
    bound_guards.push_back(ctx.guard_of(t));
  }
  // Keep theory rows behind the kept prefix: insert kept rows at n_kept.

  ExpressionEnumerator stream(spec.pool, spec.constants, spec.operators,
                              spec.max_complexity);

  const int threads = std::max(1, spec.budget.threads);
  const std::size_t batch_cap = threads == 1 ? 64 : 512;
  std::vector<ExpressionEnumerator::Candidate> batch;
  std::vector<std::vector<ExtendedReal>> batch_rows;

  bool stream_done = false;
  bool budget_hit = false;
  while (!stream_done && !budget_hit) {
    // Pull a batch, respecting the candidate budget.
    batch.clear();
    while (batch.size() < batch_cap) {
      if (spec.budget.max_candidates >= 0 &&
          report.examined + static_cast<long long>(batch.size()) >=
              spec.budget.max_candidates) {
        budget_hit = true;
        break;
      }
      ExpressionEnumerator::Candidate c;
      if (!stream.next(c)) {
        stream_done = true;
        break;
      }
      batch.push_back(c);
    }

    // Evaluate the batch on every object (parallel part).
    batch_rows.assign(batch.size(), {});
    auto eval_one = [&](std::size_t bi) {
      auto& row = batch_rows[bi];
      row.resize(spec.objects.size());
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] = stream.eval(batch[bi].node, ctx.env_pool[i]);
    };
    if (threads == 1 || batch.size() < 2) {
      for (std::size_t bi = 0; bi < batch.size(); ++bi) eval_one(bi);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
          for (std::size_t bi = t; bi < batch.size(); bi += threads) eval_one(bi);
        });
      for (auto& th : pool) th.join();
    }

    // Serial acceptance in enumeration order.
    for (std::size_t bi = 0; bi < batch.size(); ++bi) {
      ++report.examined;
      const auto& row = batch_rows[bi];
      if (!ctx.row_true(row)) continue;
      if (!row_significant(spec.direction, row, bound_rows, bound_guards)) continue;

      Expression expr = stream.materialize(batch[bi].node);
      report.kept.push_back(Conjecture{expr, spec.direction, spec.target,
                                       ConjectureStatus::Open, std::nullopt});
      bound_rows.insert(bound_rows.begin() + n_kept, row);
      bound_guards.insert(bound_guards.begin() + n_kept, ctx.guard_of(expr));
      ++n_kept;

      // Prune: keep exactly the owners of at least one object.
      std::vector<std::vector<ExtendedReal>> kept_rows(bound_rows.begin(),
                                                       bound_rows.begin() + n_kept);
      std::vector<int> own = owners(spec.direction, kept_rows, spec.objects.size());
      std::vector<char> keep(n_kept, 0);
      for (int o : own)
        if (o >= 0) keep[o] = 1;
      if (std::find(keep.begin(), keep.end(), 0) != keep.end()) {
        std::vector<Conjecture> survivors;
        std::size_t row_idx = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
          if (keep[k]) {
            survivors.push_back(std::move(report.kept[k]));
            ++row_idx;
          } else {
            report.pruned.push_back(std::move(report.kept[k]));
            bound_rows.erase(bound_rows.begin() + row_idx);
            bound_guards.erase(bound_guards.begin() + row_idx);
            --n_kept;
          }
        }
        report.kept = std::move(survivors);
      }
    }

    if (spec.budget.wall_ms >= 0 && elapsed_ms() > spec.budget.wall_ms)
      budget_hit = true;
  }

  report.partial = budget_hit && !stream_done;
  report.wall_ms = elapsed_ms();
  return report;
}

void add_counterexample(TargetSpec& spec, const Graph& g) {
  std::string key = table_key(g);
  for (const Graph& o : spec.objects)
    if (table_key(o) == key)
      throw std::invalid_argument("object already stored: " + key);
  spec.objects.push_back(g);
}

std::vector<Conjecture> refresh(std::vector<Conjecture> kept,
                                const TargetSpec& spec, ValueTable& table) {
  EvalContext ctx(spec, table);
  for (Conjecture& c : kept) {
    if (c.status == ConjectureStatus::Disproved) continue;
    std::vector<ExtendedReal> row = ctx.row_of(c.expression);
    for (std::size_t i = 0; i < row.size(); ++i) {
      bool fails = row[i].is_undefined() || ctx.alpha[i].is_undefined() ||
                   (spec.direction == Direction::Upper
                        ? row[i].raw() < ctx.alpha[i].raw()
                        : row[i].raw() > ctx.alpha[i].raw());
      if (fails) {
        c.status = ConjectureStatus::Disproved;
        c.counterexample = spec.objects[i];
        break;
      }
    }
  }
  return kept;
}

}  // namespace gconj
