#include "gconj/value_table.hpp"

#include <stdexcept>

#include "gconj/canonical.hpp"

namespace gconj {

InvariantValue ValueTable::ensure(const Graph& g, std::string_view invariant) {
  std::string key = table_key(g);
  std::string name(invariant);
  auto row = rows_.find(key);
  if (row != rows_.end()) {
    auto cell = row->second.find(name);
    if (cell != row->second.end())
      return {cell->second.value, cell->second.exact, cell->second.tolerance};
  }
  const InvariantDef* def = find_invariant(invariant);
  if (!def) throw std::invalid_argument("unknown invariant: " + name);
  InvariantValue v = def->compute(g);
  rows_[std::move(key)][std::move(name)] = Cell{v.value, v.exact, v.tolerance, {}};
  return v;
}

const ValueTable::Cell* ValueTable::find(std::string_view graph_key,
                                         std::string_view invariant) const {
  auto row = rows_.find(std::string(graph_key));
  if (row == rows_.end()) return nullptr;
  auto cell = row->second.find(std::string(invariant));
  return cell == row->second.end() ? nullptr : &cell->second;
}

void ValueTable::put(std::string graph_key, std::string invariant, Cell cell) {
  rows_[std::move(graph_key)][std::move(invariant)] = std::move(cell);
}

std::size_t ValueTable::size() const {
  std::size_t n = 0;
  for (const auto& [key, row] : rows_) n += row.size();
  return n;
}

void ValueTable::for_each(
    const std::function<void(const std::string&, const std::string&,
                             const Cell&)>& fn) const {
  for (const auto& [key, row] : rows_)
    for (const auto& [name, cell] : row) fn(key, name, cell);
}

}  // namespace gconj
