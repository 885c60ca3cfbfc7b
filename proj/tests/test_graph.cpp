#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "gconj/canonical.hpp"
#include "gconj/catalog.hpp"
#include "gconj/gen.hpp"
#include "gconj/graph.hpp"
#include "gconj/graph6.hpp"
#include "gconj/random_graphs.hpp"
#include "gconj/rng.hpp"

using namespace gconj;

namespace {

Graph shuffled(const Graph& g, Rng& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.order() - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  return g.relabeled(perm);
}

// Independent oracle: count isomorphism classes of n-vertex graphs by
// walking all 2^(n(n-1)/2) labeled graphs and marking whole S_n orbits.
// Returns {all classes, connected classes}.
std::pair<int, int> labeled_orbit_counts(int n) {
  int e = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) edges.emplace_back(i, j);

  // Precompute, per permutation, where each edge slot goes.
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> edge_maps;
  auto slot = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
  };
  do {
    std::vector<int> m(e);
    for (int k = 0; k < e; ++k) m[k] = slot(perm[edges[k].first], perm[edges[k].second]);
    edge_maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(1u << e, false);
  int classes = 0, connected = 0;
  for (std::uint32_t mask = 0; mask < (1u << e); ++mask) {
    if (seen[mask]) continue;
    ++classes;
    Graph g(n);
    for (int k = 0; k < e; ++k)
      if ((mask >> k) & 1) g.add_edge(edges[k].first, edges[k].second);
    if (is_connected(g)) ++connected;
    for (const auto& m : edge_maps) {
      std::uint32_t image = 0;
      for (int k = 0; k < e; ++k)
        if ((mask >> k) & 1) image |= 1u << m[k];
      seen[image] = true;
    }
  }
  return {classes, connected};
}

}  // namespace

TEST_CASE("graph basics: edges, degrees, components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.edge(0, 1));
  CHECK(g.edge(1, 0));
  CHECK(!g.edge(0, 2));
  CHECK(g.size() == 2);
  CHECK(g.degree(1) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
  CHECK_THROWS(g.add_edge(2, 2));
  CHECK_THROWS(g.add_edge(0, 5));
  CHECK(!is_connected(g));
  g.add_edge(3, 4);
  g.add_edge(2, 3);
  CHECK(is_connected(g));
  CHECK(bfs_distances(g, 0) == std::vector<int>{0, 1, 2, 3, 4});
  g.remove_edge(0, 1);
  CHECK(!g.edge(0, 1));

  CHECK(is_bipartite(path_graph(6)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(!is_bipartite(cycle_graph(5)));
  CHECK(complete_graph(5).degree_sequence_desc() == std::vector<int>{4, 4, 4, 4, 4});
}

TEST_CASE("graph6 encodes the K5 and empty-5 reference strings") {
  // Hand-packed: K5's upper triangle is ten 1-bits -> 111111 111100 -> "~{".
  CHECK(write_graph6(complete_graph(5)) == "D~{");
  CHECK(write_graph6(Graph(5)) == "D??");
  CHECK(parse_graph6("D~{") == complete_graph(5));
  CHECK(parse_graph6("D??") == Graph(5));
}

TEST_CASE("graph6 round-trips, headers, and malformed input") {
  Rng rng(11);
  for (int n : {1, 2, 5, 13, 40, 62}) {
    Graph g = random_er(n, 0.4, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
  // Multi-byte order header: n = 63 and a mid-size case.
  for (int n : {63, 100}) {
    Graph g = random_er(n, 0.1, rng);
    std::string enc = write_graph6(g);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == g);
  }
  CHECK(parse_graph6(">>graph6<<D~{") == complete_graph(5));
  CHECK(parse_graph6("D~{\n") == complete_graph(5));

  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("D~"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS(parse_graph6("D~{?"), std::invalid_argument);   // trailing
  CHECK_THROWS_AS(parse_graph6("D\x1c~{"), std::invalid_argument);  // bad byte
  CHECK_THROWS_AS(parse_graph6("A\x7f"), std::invalid_argument);
}

TEST_CASE("graph6 files: comments, headers, and appends") {
  std::string path = "graph6_roundtrip_test.g6";
  std::remove(path.c_str());
  append_graph6_file(path, {complete_graph(5), cycle_graph(5)}, "two demo graphs");
  append_graph6_file(path, {Graph(5)});
  auto got = read_graph6_file(path);
  REQUIRE(got.size() == 3);
  CHECK(got[0] == complete_graph(5));
  CHECK(got[1] == cycle_graph(5));
  CHECK(got[2] == Graph(5));
  std::remove(path.c_str());
  CHECK_THROWS_AS(read_graph6_file("missing_file.g6"), std::runtime_error);
}

TEST_CASE("canonical labeling is invariant, idempotent, and separating") {
  Rng rng(5);
  // Invariance under relabeling, across a spread of random and structured graphs.
  std::vector<Graph> pool = {petersen_graph(),     cycle_graph(7),
                             complete_bipartite(2, 3), star_graph(5),
                             path_graph(8),        ciliate_graph(4, 1)};
  for (int t = 0; t < 20; ++t) pool.push_back(random_er(rng.uniform_int(1, 10), 0.35, rng));
  for (const Graph& g : pool) {
    std::string form = canonical_form(g);
    for (int t = 0; t < 6; ++t) CHECK(canonical_form(shuffled(g, rng)) == form);
    Graph canon = canonical_graph(g);
    CHECK(canonical_graph(canon) == canon);
    CHECK(is_isomorphic(g, canon));
  }

  // Separation spot checks: same degree sequence, different graphs.
  CHECK(!is_isomorphic(cycle_graph(6), Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  CHECK(!is_isomorphic(star_graph(3), path_graph(4)));
  CHECK(is_isomorphic(complete_bipartite(2, 2), cycle_graph(4)));

  // Highly symmetric graphs must stay cheap thanks to twin collapsing.
  CHECK(canonical_graph(complete_graph(16)) == complete_graph(16));
  CHECK(canonical_form(complete_bipartite(8, 8)) ==
        canonical_form(shuffled(complete_bipartite(8, 8), rng)));
  CHECK_THROWS_AS(canonical_graph(random_er(17, 0.5, rng)), std::length_error);

  CHECK(table_key(petersen_graph()) == canonical_form(petersen_graph()));
  Graph big = random_er(20, 0.3, rng);
  CHECK(table_key(big) == write_graph6(big));
}

TEST_CASE("generator matches known counts and the labeled-orbit oracle") {
  const std::array<int, 7> all_counts = {1, 2, 4, 11, 34, 156, 1044};
  const std::array<int, 7> conn_counts = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(all_graphs(n).size()) == all_counts[n - 1]);
    CHECK(static_cast<int>(connected_graphs(n).size()) == conn_counts[n - 1]);
    if (n <= 6) {
      auto [all, conn] = labeled_orbit_counts(n);
      CHECK(all == static_cast<int>(all_graphs(n).size()));
      CHECK(conn == static_cast<int>(connected_graphs(n).size()));
    }
  }

  // Representatives are canonical, distinct, and correctly ordered.
  const auto& level6 = all_graphs(6);
  std::set<std::string> forms;
  for (const Graph& g : level6) {
    std::string f = write_graph6(g);
    CHECK(canonical_form(g) == f);
    forms.insert(f);
  }
  CHECK(forms.size() == level6.size());
  CHECK(std::is_sorted(level6.begin(), level6.end(),
                       [](const Graph& a, const Graph& b) {
                         return write_graph6(a) < write_graph6(b);
                       }));
  CHECK_THROWS_AS(all_graphs(9), std::out_of_range);
  CHECK_THROWS_AS(all_graphs(0), std::out_of_range);
}

TEST_CASE("catalog families have the right shapes") {
  CHECK(petersen_graph().order() == 10);
  CHECK(petersen_graph().size() == 15);
  CHECK(petersen_graph().degree_sequence_desc() == std::vector<int>(10, 3));
  CHECK(complete_bipartite(2, 3).size() == 6);
  CHECK(star_graph(4).degree_sequence_desc() == std::vector<int>{4, 1, 1, 1, 1});

  Graph cil = ciliate_graph(6, 2);
  CHECK(cil.order() == 18);
  CHECK(cil.size() == 18);
  CHECK(is_connected(cil));
  CHECK(ciliate_graph(2, 3).order() == 8);
  CHECK(ciliate_graph(2, 0).size() == 1);  // the degenerate two-cycle is one edge
  CHECK_THROWS_AS(ciliate_graph(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(ciliate_graph(4, -1), std::invalid_argument);

  CHECK(catalog_graph("petersen").order() == 10);
  CHECK(catalog_graph("k5") == complete_graph(5));
  CHECK(catalog_graph("c9").order() == 9);
  CHECK(catalog_graph("p3").size() == 2);
  CHECK(catalog_graph("k3_4").size() == 12);
  CHECK(catalog_graph("k1_7").order() == 8);
  CHECK(catalog_graph("ciliate_8_1").order() == 16);
  CHECK_THROWS_AS(catalog_graph("q17"), std::invalid_argument);
  CHECK_THROWS_AS(catalog_graph("k2_"), std::invalid_argument);

  // Catalog names are unique and resolvable.
  std::set<std::string> names;
  for (const Graph& g : catalog()) {
    CHECK(!g.name().empty());
    CHECK(names.insert(g.name()).second);
    CHECK(catalog_graph(g.name()) == g);
  }
}

TEST_CASE("random models are deterministic per seed and well-formed") {
  Rng a(42), b(42), c(43);
  Graph ga = random_er(12, 0.3, a), gb = random_er(12, 0.3, b), gc = random_er(12, 0.3, c);
  CHECK(ga == gb);
  CHECK(!(ga == gc));

  Rng r(7);
  Graph reg = random_regular(10, 3, r);
  CHECK(reg.degree_sequence_desc() == std::vector<int>(10, 3));
  CHECK_THROWS_AS(random_regular(5, 3, r), std::invalid_argument);  // odd n*d

  Graph bip = random_bipartite(4, 5, 0.5, r);
  CHECK(is_bipartite(bip));
  CHECK(bip.order() == 9);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) CHECK(!bip.edge(u, v));

  CHECK_THROWS_AS(random_er(3, 1.5, r), std::invalid_argument);
}
