#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gconj/expr.hpp"
#include "gconj/expr_parse.hpp"

namespace gconj {

enum class CorpusSource { Theorem1, Theorem2, Conjecture1, Conjecture2, OpenList };

/// One statement about the independence number: `target direction text`,
/// interpreted over the graphs its preconditions admit.
struct CorpusEntry {
  std::string name;   // "theorem1", "conjecture2", "open5", ...
  std::string text;   // right-hand side, e.g. "order(x) - radius(x)"
  Direction direction = Direction::Lower;
  CorpusSource source = CorpusSource::OpenList;
  int open_index = 0;        // 1-based position within the open list
  bool connected_only = false;
  int min_order = 1;
  std::string target = "independence_number";
};

/// The built-in statements: two proved theorems, the two workshop
/// conjectures, and the nine open lower-bound conjectures.
const std::vector<CorpusEntry>& builtin_corpus();

const CorpusEntry* find_entry(std::string_view name);

/// Parses an entry's text against the standard invariant symbols.
Expression entry_expression(const CorpusEntry& entry);

/// Full display line, e.g. "independence_number(x) >= residue(x)".
std::string entry_line(const CorpusEntry& entry);

}  // namespace gconj
