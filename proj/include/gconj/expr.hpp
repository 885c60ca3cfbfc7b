#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gconj/extended_real.hpp"
#include "gconj/ops.hpp"
#include "gconj/rational.hpp"

namespace gconj {

/// A named graph-invariant slot an expression can refer to. The id is the
/// caller's index into its evaluation environment.
struct InvariantSymbol {
  int id = 0;
  std::string name;

  friend bool operator==(const InvariantSymbol& a, const InvariantSymbol& b) {
    return a.id == b.id && a.name == b.name;
  }
};

/// Immutable expression tree over invariant symbols and rational constants.
/// Nodes are shared; copying an Expression is cheap.
class Expression {
public:
  enum class Kind : std::uint8_t { Symbol, Constant, Unary, Binary };

  Expression() = default;  // empty; most APIs reject it

  static Expression symbol(InvariantSymbol sym);
  static Expression constant(Rational value);
  static Expression unary(OpCode op, Expression child);
  static Expression binary(OpCode op, Expression left, Expression right);

  bool empty() const { return root_ == nullptr; }
  Kind kind() const;
  OpCode op() const;                    // Unary/Binary only
  const InvariantSymbol& sym() const;   // Symbol only
  const Rational& constant_value() const;  // Constant only
  Expression left() const;              // Unary: the child; Binary: left
  Expression right() const;             // Binary only

  /// Node count (leaves and operators each count 1).
  int complexity() const;

  /// Byte string that identifies the tree up to reordering of commutative
  /// children: children of commutative operators are serialized in sorted
  /// key order. Prefix-free per node, so distinct trees (mod commutativity)
  /// always get distinct keys. Ordered comparisons of keys give the
  /// within-stratum enumeration order.
  std::string canonical_key() const;

  /// Human-readable rendering, e.g. "order(x) - matching_number(x)" or
  /// "minimum(girth(x), floor(lovasz_theta(x)))". Infix for + - * / ^ with
  /// minimal parentheses, function style for the rest.
  std::string render() const;

  /// Evaluates with the given environment (symbol id -> value). Missing ids
  /// evaluate to Undefined.
  ExtendedReal evaluate(const std::map<int, ExtendedReal>& env) const;

  /// Fast path: env indexed directly by symbol id; ids outside the span are
  /// Undefined.
  ExtendedReal evaluate(std::span<const ExtendedReal> env) const;

  /// Collects the distinct symbol ids used, ascending.
  std::vector<int> symbol_ids() const;

  bool same_key(const Expression& other) const {
    return canonical_key() == other.canonical_key();
  }

  struct Node;  // opaque; defined in expr.cpp

private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace gconj
