#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gconj/expr.hpp"

namespace gconj {

/// Orientation of a bound on the target invariant:
/// Upper means target <= expr, Lower means target >= expr.
enum class Direction { Upper, Lower };

inline const char* direction_text(Direction d) {
  return d == Direction::Upper ? "<=" : ">=";
}

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Name -> symbol resolution for the parser.
class SymbolTable {
public:
  void add(InvariantSymbol sym) { syms_.push_back(std::move(sym)); }
  const InvariantSymbol* find(std::string_view name) const {
    for (const auto& s : syms_)
      if (s.name == name) return &s;
    return nullptr;
  }
  const std::vector<InvariantSymbol>& all() const { return syms_; }

private:
  std::vector<InvariantSymbol> syms_;
};

/// Parses the textual expression grammar used everywhere in this project:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' factor)?
///   atom   := number | name | name '(' x ')' | func '(' args ')' | '(' expr ')'
/// Operator names minimum/maximum/min/max, sqrt, floor, ceil, log, tan,
/// arccosh/acosh are function calls; every other name must resolve in
/// `symbols` and may carry an optional "(x)" suffix, which is ignored.
/// A quotient of two numeric literals folds into one exact rational
/// constant. Throws ParseError with a position on bad input.
Expression parse_expression(std::string_view text, const SymbolTable& symbols);

struct ConjectureLine {
  std::string target;  // invariant name on the left-hand side
  Direction direction;
  Expression rhs;
};

/// Parses "name(x) <= expr" / "name(x) >= expr" (the "(x)" is optional).
/// The target name is returned verbatim; it is not resolved against
/// `symbols`, so callers can validate it against whatever registry they use.
ConjectureLine parse_conjecture_line(std::string_view text, const SymbolTable& symbols);

}  // namespace gconj
