#include "gconj/corpus.hpp"

#include "gconj/invariants.hpp"

namespace gconj {

const std::vector<CorpusEntry>& builtin_corpus() {
  static const std::vector<CorpusEntry> entries = [] {
    std::vector<CorpusEntry> out;
    // Proved bounds. The first needs connectivity (radius); the second holds
    // for every graph.
    out.push_back({"theorem1", "order(x) - radius(x)", Direction::Upper,
                   CorpusSource::Theorem1, 0, true, 1});
    out.push_back({"theorem2", "max_degree(x) - triangle_number(x)",
                   Direction::Lower, CorpusSource::Theorem2, 0, false, 1});
    // The two workshop conjectures, both stated for connected graphs; the
    // second needs order >= 2 for average_distance to be defined.
    out.push_back({"conjecture1", "minimum(girth(x), floor(lovasz_theta(x)))",
                   Direction::Lower, CorpusSource::Conjecture1, 0, true, 1});
    out.push_back({"conjecture2", "average_distance(x)^degree_sum(x)",
                   Direction::Upper, CorpusSource::Conjecture2, 0, true, 2});
    // The open lower-bound list, stated for connected graphs.
    const char* open_texts[] = {
        "minimum(girth(x), floor(lovasz_theta(x)))",
        "minimum(diameter(x), lovasz_theta(x))",
        "maximum(residue(x), 1/2*lovasz_theta(x))",
        "2*floor(arccosh(lovasz_theta(x)))",
        "floor(arccosh(lovasz_theta(x)))^2",
        "ceil(lovasz_theta(x)) - radius(x)",
        "ceil(lovasz_theta(x)) - girth(x)",
        "floor(2*tan(matching_number(x)) - 2)",
        "floor(log(tan(order(x))^2)/log(10))",
    };
    for (int i = 0; i < 9; ++i)
      out.push_back({"open" + std::to_string(i + 1), open_texts[i],
                     Direction::Lower, CorpusSource::OpenList, i + 1, true, 1});
    return out;
  }();
  return entries;
}

const CorpusEntry* find_entry(std::string_view name) {
  for (const auto& e : builtin_corpus())
    if (e.name == name) return &e;
  return nullptr;
}

Expression entry_expression(const CorpusEntry& entry) {
  static const SymbolTable symbols = standard_symbol_table();
  return parse_expression(entry.text, symbols);
}

std::string entry_line(const CorpusEntry& entry) {
  return entry.target + "(x) " + direction_text(entry.direction) + " " +
         entry_expression(entry).render();
}

}  // namespace gconj
