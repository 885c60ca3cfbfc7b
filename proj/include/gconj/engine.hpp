#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gconj/expr.hpp"
#include "gconj/expr_parse.hpp"
#include "gconj/graph.hpp"
#include "gconj/ops.hpp"
#include "gconj/rational.hpp"
#include "gconj/value_table.hpp"

namespace gconj {

struct RunBudget {
  long long max_candidates = -1;  // < 0: unlimited
  double wall_ms = -1;            // < 0: unlimited
  int threads = 1;                // candidate evaluation fan-out
};

/// Everything one conjecturing run needs: the invariant being bounded, the
/// direction, the stored objects, and the expression-language pools.
struct TargetSpec {
  InvariantSymbol target;
  Direction direction = Direction::Upper;
  std::vector<Graph> objects;
  std::vector<InvariantSymbol> pool;  // bounding invariants; target excluded
  std::vector<Rational> constants;
  std::vector<OpCode> operators;
  std::vector<Expression> theory;  // already-proved bounds, same direction
  int max_complexity = 5;
  RunBudget budget;
};

enum class ConjectureStatus { Open, Proved, Disproved };

struct Conjecture {
  Expression expression;
  Direction direction = Direction::Upper;
  InvariantSymbol target;
  ConjectureStatus status = ConjectureStatus::Open;
  std::optional<Graph> counterexample;  // set when status == Disproved
};

/// Standard one-line rendering: "independence_number(x) <= order(x) - ...".
std::string conjecture_text(const InvariantSymbol& target, Direction direction,
                            const Expression& rhs);
std::string conjecture_text(const Conjecture& c);

struct RunReport {
  std::vector<Conjecture> kept;    // survivors, in emission order
  std::vector<Conjecture> pruned;  // emitted but later dominated, kept for the record
  long long examined = 0;
  double wall_ms = 0.0;
  bool partial = false;  // a budget stopped the stream early
};

/// True iff e is defined on every object and bounds the target on all of
/// them (>= target for Upper, <= target for Lower).
bool truth_check(const Expression& e, const TargetSpec& spec, ValueTable& table);

/// True iff some object exists where e strictly beats every kept conjecture
/// and every theory bound (less for Upper, greater for Lower). A bound that
/// is only approximate must be beaten by more than its tolerance; a bound
/// undefined on an object imposes nothing there. With no kept conjectures
/// and no theory, any true candidate is significant.
bool significance_check(const Expression& e, const std::vector<Conjecture>& kept,
                        const TargetSpec& spec, ValueTable& table);

/// Keeps exactly the conjectures that are strictly best (ties go to the
/// earlier-emitted) on at least one object; the pointwise best bound is
/// unchanged.
std::vector<Conjecture> prune_dominated(std::vector<Conjecture> kept,
                                        const TargetSpec& spec, ValueTable& table);

/// Streams candidates in (complexity, canonical key) order, keeping each one
/// that passes truth and significance, pruning after every insert.
/// Deterministic for a fixed spec, independent of budget.threads.
RunReport run(const TargetSpec& spec, ValueTable& table);

/// Appends an object; throws std::invalid_argument when an isomorphic
/// object (same table key) is already stored.
void add_counterexample(TargetSpec& spec, const Graph& g);

/// Re-checks kept conjectures over the current object set; the falsified
/// ones come back Disproved with the first violating object as witness.
std::vector<Conjecture> refresh(std::vector<Conjecture> kept,
                                const TargetSpec& spec, ValueTable& table);

}  // namespace gconj
