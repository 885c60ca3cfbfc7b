#include "gconj/graph6.hpp"

#include <fstream>
#include <stdexcept>

namespace gconj {

std::string write_graph6(const Graph& g) {
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw std::length_error("graph too large for graph6");
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty graph6 string");

  auto sextet = [&](std::size_t i) -> int {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw std::invalid_argument("bad graph6 character");
    return c - 63;
  };

  std::size_t pos = 0;
  long long n;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw std::invalid_argument("graph6 orders beyond two-byte range unsupported");
    if (text.size() < 4) throw std::invalid_argument("truncated graph6 header");
    n = (static_cast<long long>(sextet(1)) << 12) | (sextet(2) << 6) | sextet(3);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }

  long long tri = n * (n - 1) / 2;
  std::size_t need = static_cast<std::size_t>((tri + 5) / 6);
  if (text.size() - pos != need)
    throw std::invalid_argument("graph6 body length mismatch");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int v = sextet(pos + static_cast<std::size_t>(bit / 6));
      if ((v >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  // Padding bits must be zero.
  for (long long b = tri; b < static_cast<long long>(need) * 6; ++b)
    if ((sextet(pos + static_cast<std::size_t>(b / 6)) >> (5 - b % 6)) & 1)
      throw std::invalid_argument("nonzero padding in graph6");
  return g;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty() || sv.front() == '#') continue;
    try {
      out.push_back(parse_graph6(sv));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void append_graph6_file(const std::string& path, const std::vector<Graph>& graphs,
                        const std::string& comment) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open graph file for append: " + path);
  if (!comment.empty()) out << "# " << comment << "\n";
  for (const Graph& g : graphs) out << write_graph6(g) << "\n";
}

}  // namespace gconj
