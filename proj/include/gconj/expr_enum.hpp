#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gconj/expr.hpp"

namespace gconj {

/// Streams every expression over a pool of invariant symbols, rational
/// constants, and operators, in order of rising complexity (node count) and,
/// within one complexity stratum, ascending canonical key. Expressions are
/// distinct up to commutative reordering; no other algebraic identification
/// is applied, so e.g. x+x, 1*x, and sqrt(x*x) are all separate candidates.
///
/// The caller pulls candidates one at a time; strata are materialized
/// lazily, so abandoning the stream early does not pay for deeper strata.
/// Internally nodes live in a flat arena; `materialize` converts an arena
/// node to a shared Expression on demand, and `eval` runs directly on the
/// arena for speed.
class ExpressionEnumerator {
public:
  struct Candidate {
    int complexity = 0;
    std::uint32_t node = 0;        // arena handle, pass to materialize()/eval()
    std::string_view key;          // canonical key bytes (valid while alive)
  };

  /// max_nodes caps the arena as a memory guard; exceeding it throws
  /// std::length_error when the offending stratum is built.
  ExpressionEnumerator(std::vector<InvariantSymbol> symbols,
                       std::vector<Rational> constants,
                       std::vector<OpCode> operators, int max_complexity,
                       std::uint64_t max_nodes = 64u << 20);

  /// Advances to the next candidate; false when the stream is exhausted.
  bool next(Candidate& out);

  /// Restarts the stream. Already-built strata are reused.
  void reset();

  /// Number of expressions of exactly this complexity (builds the stratum).
  std::uint64_t count_at(int complexity);

  Expression materialize(std::uint32_t node) const;

  /// Evaluates an arena node; env is indexed by *pool position*, i.e.
  /// env[i] is the value of symbols()[i].
  ExtendedReal eval(std::uint32_t node, std::span<const ExtendedReal> env) const;

  const std::vector<InvariantSymbol>& symbols() const { return symbols_; }
  int max_complexity() const { return max_complexity_; }

private:
  struct ArenaNode {
    std::uint8_t kind;    // 0 symbol, 1 constant, 2 unary, 3 binary
    std::uint8_t op;
    std::uint16_t payload;  // pool index for leaves
    std::uint32_t a = 0, b = 0;  // child node handles
  };

  struct Stratum {
    bool built = false;
    std::vector<std::uint32_t> roots;  // sorted by key
  };

  std::string_view key_of(std::uint32_t node) const {
    return {keybuf_.data() + key_off_[node], key_len_[node]};
  }

  // Children are named by node id (-1 for none) because their keys live in
  // keybuf_ itself; the key bytes are copied offset-based after a reserve so
  // growth cannot invalidate the source. For commutative ops the caller
  // passes the children already in key order.
  std::uint32_t add_node(const ArenaNode& n, std::string_view key_prefix,
                         std::int64_t key_child1, std::int64_t key_child2);
  void build_stratum(int c);

  std::vector<InvariantSymbol> symbols_;
  std::vector<Rational> constants_;
  std::vector<OpCode> unary_ops_, binary_ops_;
  int max_complexity_;
  std::uint64_t max_nodes_;

  std::vector<ArenaNode> nodes_;
  std::string keybuf_;
  std::vector<std::uint64_t> key_off_;
  std::vector<std::uint16_t> key_len_;
  std::vector<Stratum> strata_;  // index c-1

  int cur_c_ = 1;
  std::size_t cur_i_ = 0;
};

/// Convenience wrapper: first `limit` expressions as full trees.
std::vector<Expression> enumerate_expressions(
    const std::vector<InvariantSymbol>& symbols,
    const std::vector<Rational>& constants, const std::vector<OpCode>& operators,
    int max_complexity, std::size_t limit = static_cast<std::size_t>(-1));

}  // namespace gconj
