#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gconj/expr.hpp"
#include "gconj/expr_parse.hpp"
#include "gconj/extended_real.hpp"
#include "gconj/graph.hpp"

namespace gconj {

// ---- individual invariants ------------------------------------------------
// Distance-based invariants return Undefined on disconnected graphs. The
// exact solvers guard their practical ranges with std::length_error; the
// registry records those caps so samplers can respect them.

long long graph_order(const Graph& g);
long long graph_size(const Graph& g);
long long degree_sum(const Graph& g);
long long max_degree(const Graph& g);

ExtendedReal radius(const Graph& g);
ExtendedReal diameter(const Graph& g);
/// Mean distance over unordered vertex pairs; needs n >= 2 and connectivity.
ExtendedReal average_distance(const Graph& g);
/// Length of a shortest cycle; +inf for forests.
ExtendedReal girth(const Graph& g);

long long triangle_number(const Graph& g);

/// Maximum matching size by subset dynamic programming (n <= 22).
int matching_number(const Graph& g);

/// Maximum independent set by branch and bound with degree-0/1 reduction
/// (n <= 64).
int independence_number(const Graph& g);

/// Largest k whose k smallest degrees sum to at most the other degrees' sum.
int annihilation_number(const Graph& g);

/// LP relaxation of independence: computed exactly as half the independence
/// number of the bipartite double cover (values are multiples of 1/2; n <= 32).
double fractional_independence_number(const Graph& g);

/// min(#eigenvalues >= 0, #eigenvalues <= 0) of the adjacency matrix,
/// counting eigenvalues within 1e-8 of zero on both sides.
int cvetkovic_bound(const Graph& g);

/// Largest k with k(k-1) <= n^2 - n - 2m (connected graphs).
int hansen_zheng_bound(const Graph& g);

/// Zeros left when the Havel–Hakimi reduction of the degree sequence ends.
int residue(const Graph& g);

/// Size of a largest independent set among those maximizing |I| - |N(I)|
/// (n <= 20).
int critical_independence_number(const Graph& g);

/// max over v of (#vertices at even distance from v) minus (#edges among
/// them); needs connectivity.
ExtendedReal max_even_minus_even_horizontal(const Graph& g);

// ---- registry ---------------------------------------------------------------

/// A computed invariant value: `exact` distinguishes solver results that are
/// only accurate to `tolerance` (theta) from exact integers/rationals. An
/// approximate invariant can further promise it never undershoots the true
/// value (`upper_feasible`).
struct InvariantValue {
  ExtendedReal value;
  bool exact = true;
  double tolerance = 0.0;
};

struct InvariantDef {
  std::string name;
  std::function<InvariantValue(const Graph&)> compute;
  bool integral = true;           // defined values are integers
  bool requires_connected = false;
  int min_order = 1;              // below this the value is Undefined
  int max_practical_order = 0;    // 0 = unbounded; samplers must respect it
  bool approximate = false;
  bool upper_feasible = false;    // approximate value is always >= truth
};

/// All invariants this project knows, in a fixed order; the index of an
/// invariant here is its symbol id everywhere (expressions, tables, CLI).
const std::vector<InvariantDef>& invariant_registry();

const InvariantDef* find_invariant(std::string_view name);
int invariant_id(std::string_view name);  // -1 when unknown

/// Symbols for every registry entry (id = registry index).
std::vector<InvariantSymbol> standard_symbols();
SymbolTable standard_symbol_table();

}  // namespace gconj
