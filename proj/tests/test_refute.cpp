#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "gconj/canonical.hpp"
#include "gconj/catalog.hpp"
#include "gconj/corpus.hpp"
#include "gconj/gen.hpp"
#include "gconj/graph6.hpp"
#include "gconj/harness.hpp"
#include "gconj/interval.hpp"
#include "gconj/invariants.hpp"

using namespace gconj;

namespace {

CorpusEntry make_entry(std::string name, std::string text, Direction dir,
                       bool connected_only = false, int min_order = 1) {
  CorpusEntry e;
  e.name = std::move(name);
  e.text = std::move(text);
  e.direction = dir;
  e.connected_only = connected_only;
  e.min_order = min_order;
  return e;
}

// A deliberately false upper bound: the residue is a *lower* bound on the
// independence number, with equality on every connected graph of order <= 4
// and the first strict violations at order 5.
CorpusEntry false_residue_upper() {
  return make_entry("false_upper_residue", "residue(x)", Direction::Upper);
}

double invariant_on(const Graph& g, std::string_view name) {
  const InvariantDef* def = find_invariant(name);
  REQUIRE(def != nullptr);
  InvariantValue v = def->compute(g);
  REQUIRE_FALSE(v.value.is_undefined());
  return v.value.raw();
}

}  // namespace

TEST_CASE("builtin corpus has the thirteen expected statements") {
  const auto& corpus = builtin_corpus();
  REQUIRE(corpus.size() == 13);

  std::vector<std::string> names;
  for (const auto& e : corpus) names.push_back(e.name);
  std::vector<std::string> expected = {
      "theorem1", "theorem2", "conjecture1", "conjecture2", "open1", "open2",
      "open3",    "open4",    "open5",       "open6",       "open7", "open8",
      "open9"};
  CHECK(names == expected);

  for (const auto& e : corpus) {
    CAPTURE(e.name);
    CHECK(e.target == "independence_number");
    Expression rhs = entry_expression(e);
    CHECK_FALSE(rhs.empty());
    CHECK(rhs.complexity() >= 1);
  }

  CHECK(find_entry("theorem1")->direction == Direction::Upper);
  CHECK(find_entry("theorem2")->direction == Direction::Lower);
  CHECK(find_entry("conjecture1")->direction == Direction::Lower);
  CHECK(find_entry("conjecture2")->direction == Direction::Upper);
  for (int i = 1; i <= 9; ++i) {
    const CorpusEntry* e = find_entry("open" + std::to_string(i));
    REQUIRE(e != nullptr);
    CHECK(e->direction == Direction::Lower);
    CHECK(e->open_index == i);
    CHECK(e->connected_only);
  }
  CHECK(find_entry("does_not_exist") == nullptr);

  // Entry-level preconditions: theorem2 holds for every graph, the others
  // are statements about connected graphs; average_distance needs order 2.
  CHECK_FALSE(find_entry("theorem2")->connected_only);
  CHECK(find_entry("theorem1")->connected_only);
  CHECK(find_entry("conjecture2")->min_order == 2);

  CHECK(entry_line(*find_entry("theorem1")) ==
        "independence_number(x) <= order(x) - radius(x)");
  CHECK(entry_line(*find_entry("theorem2")) ==
        "independence_number(x) >= max_degree(x) - triangle_number(x)");
  for (int i = 1; i <= 9; ++i) {
    std::string line = entry_line(*find_entry("open" + std::to_string(i)));
    CHECK(line.rfind("independence_number(x) >= ", 0) == 0);
  }
}

TEST_CASE("range arithmetic encloses point evaluation") {
  auto pt = [](double v) { return ERange::point(ExtendedReal::of(v)); };

  SUBCASE("points behave exactly like the scalar operators") {
    for (OpCode op : {OpCode::Add, OpCode::Sub, OpCode::Mul, OpCode::Div,
                      OpCode::Pow, OpCode::Min, OpCode::Max}) {
      ERange r = apply_range(op, pt(3.0), pt(2.0));
      ExtendedReal direct = apply_op(op, ExtendedReal::of(3.0), ExtendedReal::of(2.0));
      REQUIRE(r.defined_possible);
      CHECK_FALSE(r.undef_possible);
      CHECK(r.lo.raw() == direct.raw());
      CHECK(r.hi.raw() == direct.raw());
    }
  }

  SUBCASE("interval addition and multiplication take corner hulls") {
    ERange sum = apply_range(OpCode::Add, ERange::band(ExtendedReal::of(1), ExtendedReal::of(2)),
                             ERange::band(ExtendedReal::of(3), ExtendedReal::of(5)));
    CHECK(sum.lo.raw() == 4.0);
    CHECK(sum.hi.raw() == 7.0);
    CHECK_FALSE(sum.undef_possible);

    ERange prod = apply_range(OpCode::Mul,
                              ERange::band(ExtendedReal::of(-1), ExtendedReal::of(2)),
                              ERange::band(ExtendedReal::of(3), ExtendedReal::of(4)));
    CHECK(prod.lo.raw() == -4.0);
    CHECK(prod.hi.raw() == 8.0);
  }

  SUBCASE("division by an interval through zero admits undefined") {
    ERange r = apply_range(OpCode::Div, pt(1.0),
                           ERange::band(ExtendedReal::of(-1), ExtendedReal::of(1)));
    CHECK(r.undef_possible);
    CHECK(r.defined_possible);
    CHECK(r.lo.is_neg_inf());
    CHECK(r.hi.is_pos_inf());

    ERange by_zero = apply_range(OpCode::Div, pt(1.0), pt(0.0));
    CHECK(by_zero.undef_possible);
    CHECK_FALSE(by_zero.defined_possible);
  }

  SUBCASE("sqrt and log clip their domains and flag the lost part") {
    ERange s = apply_range(OpCode::Sqrt,
                           ERange::band(ExtendedReal::of(-4), ExtendedReal::of(9)));
    CHECK(s.undef_possible);
    CHECK(s.lo.raw() == 0.0);
    CHECK(s.hi.raw() == 3.0);

    ERange l = apply_range(OpCode::Log,
                           ERange::band(ExtendedReal::of(0), ExtendedReal::of(std::exp(1.0))));
    CHECK(l.undef_possible);
    CHECK(l.lo.is_neg_inf());
    CHECK(l.hi.raw() == doctest::Approx(1.0));

    ERange all_bad = apply_range(OpCode::Sqrt,
                                 ERange::band(ExtendedReal::of(-9), ExtendedReal::of(-1)));
    CHECK(all_bad.undef_possible);
    CHECK_FALSE(all_bad.defined_possible);
  }

  SUBCASE("floor hulls its endpoints") {
    ERange f = apply_range(OpCode::Floor,
                           ERange::band(ExtendedReal::of(1.2), ExtendedReal::of(2.7)));
    CHECK(f.lo.raw() == 1.0);
    CHECK(f.hi.raw() == 2.0);
  }

  SUBCASE("negative bases make powers undefined") {
    ERange r = apply_range(OpCode::Pow,
                           ERange::band(ExtendedReal::of(-2), ExtendedReal::of(-1)),
                           pt(2.0));
    CHECK(r.undef_possible);
    CHECK_FALSE(r.defined_possible);
  }

  SUBCASE("expression evaluation over exact cells reduces to points") {
    SymbolTable table = standard_symbol_table();
    Expression e = parse_expression("sqrt(order(x)) + matching_number(x)", table);
    Graph pet = petersen_graph();
    std::vector<ERange> env(invariant_registry().size(), ERange::nowhere());
    std::vector<ExtendedReal> point_env;
    for (const auto& def : invariant_registry()) {
      ExtendedReal v = def.compute(pet).value;
      point_env.push_back(v);
      env[static_cast<std::size_t>(invariant_id(def.name))] = ERange::point(v);
    }
    ERange r = evaluate_range(e, env);
    ExtendedReal direct = e.evaluate(point_env);
    REQUIRE(r.is_point());
    CHECK(r.lo.raw() == direct.raw());
  }
}

TEST_CASE("single-graph verdicts respect preconditions and certificates") {
  const CorpusEntry& theorem1 = *find_entry("theorem1");

  CHECK(check_entry_on(theorem1, complete_graph(5)) == EntryVerdict::Holds);
  CHECK(check_entry_on(theorem1, petersen_graph()) == EntryVerdict::Holds);
  // Disconnected: radius is undefined, but the entry only claims connected
  // graphs, so this is a skip, not a violation.
  CHECK(check_entry_on(theorem1, Graph(2)) == EntryVerdict::Skipped);

  const CorpusEntry& conjecture2 = *find_entry("conjecture2");
  CHECK(check_entry_on(conjecture2, complete_graph(1)) == EntryVerdict::Skipped);
  CHECK(check_entry_on(conjecture2, complete_graph(2)) == EntryVerdict::Holds);
  CHECK(check_entry_on(conjecture2, path_graph(3)) == EntryVerdict::Holds);

  const CorpusEntry& conjecture1 = *find_entry("conjecture1");
  CHECK(check_entry_on(conjecture1, cycle_graph(5)) == EntryVerdict::Holds);
  CHECK(check_entry_on(conjecture1, petersen_graph()) == EntryVerdict::Holds);

  CorpusEntry bogus = false_residue_upper();
  CHECK(check_entry_on(bogus, complete_graph(5)) == EntryVerdict::Holds);
  CHECK(check_entry_on(bogus, complete_bipartite(2, 3)) == EntryVerdict::Fails);

  // An expression undefined on an admitted graph counts as a violation.
  CorpusEntry undef_entry =
      make_entry("undef", "log(order(x) - order(x))", Direction::Upper);
  CHECK(check_entry_on(undef_entry, complete_graph(1)) == EntryVerdict::Fails);
}

TEST_CASE("approximate cells verify through their tolerance band") {
  CorpusEntry theta_upper =
      make_entry("theta_upper", "lovasz_theta(x)", Direction::Upper, true);

  // Genuine check: alpha(C5) = 2 and theta ~ 2.236, so even the bottom of
  // the band certifies the bound.
  CHECK(check_entry_on(theta_upper, cycle_graph(5)) == EntryVerdict::Holds);

  // Inject a band that straddles alpha: the harness must refuse to certify.
  ValueTable table;
  table.put(table_key(cycle_graph(5)), "lovasz_theta",
            ValueTable::Cell{ExtendedReal::of(2.0005), false, 1e-3, {}});
  CHECK(check_entry_on(theta_upper, cycle_graph(5), &table) == EntryVerdict::Fails);
}

TEST_CASE("exhaustive checks count the generator classes exactly") {
  const CorpusEntry& theorem1 = *find_entry("theorem1");

  CheckOutcome out = exhaustive_check(theorem1, 6, true);
  CHECK_FALSE(out.counterexample.has_value());
  CHECK(out.checked == 143);  // 1+1+2+6+21+112 connected graphs
  CHECK(out.skipped == 0);

  SUBCASE("generating all graphs skips the disconnected ones") {
    CheckOutcome all = exhaustive_check(theorem1, 5, false);
    CHECK_FALSE(all.counterexample.has_value());
    CHECK(all.checked == 1 + 1 + 2 + 6 + 21);
    CHECK(all.checked + all.skipped == 1 + 2 + 4 + 11 + 34);
  }

  SUBCASE("theorem2 holds over all graphs, connected or not") {
    CheckOutcome all = exhaustive_check(*find_entry("theorem2"), 5, false);
    CHECK_FALSE(all.counterexample.has_value());
    CHECK(all.checked == 1 + 2 + 4 + 11 + 34);
    CHECK(all.skipped == 0);
  }

  SUBCASE("order bounds are validated") {
    CHECK_THROWS_AS(exhaustive_check(theorem1, 0, true), std::invalid_argument);
    CHECK_THROWS_AS(exhaustive_check(theorem1, 9, true), std::invalid_argument);
  }
}

TEST_CASE("a false statement is caught and the witness really violates it") {
  CorpusEntry bogus = false_residue_upper();

  // True on every connected graph of order <= 4...
  CheckOutcome small = exhaustive_check(bogus, 4, true);
  CHECK_FALSE(small.counterexample.has_value());
  CHECK(small.checked == 1 + 1 + 2 + 6);

  // ...first violated at order 5.
  CheckOutcome out = exhaustive_check(bogus, 5, true);
  REQUIRE(out.counterexample.has_value());
  CHECK(out.counterexample->order() == 5);
  CHECK_FALSE(out.counterexample_g6.empty());

  // The reported graph6 witness decodes to the same graph.
  Graph decoded = parse_graph6(out.counterexample_g6);
  CHECK(table_key(decoded) == table_key(*out.counterexample));

  // Independent re-evaluation confirms the violation.
  double alpha = invariant_on(*out.counterexample, "independence_number");
  double residue = invariant_on(*out.counterexample, "residue");
  CHECK(alpha > residue);

  SUBCASE("parallel checking finds the same first witness") {
    CheckOutcome par = exhaustive_check(bogus, 5, true, nullptr, 4);
    REQUIRE(par.counterexample.has_value());
    CHECK(par.counterexample_g6 == out.counterexample_g6);
    CHECK(par.checked == out.checked);
    CHECK(par.skipped == out.skipped);
  }
}

TEST_CASE("exhaustive checks reuse and fill a value table") {
  const CorpusEntry& theorem1 = *find_entry("theorem1");
  ValueTable table;
  CheckOutcome first = exhaustive_check(theorem1, 4, true, &table);
  CHECK(first.checked == 10);
  CHECK(table.size() > 0);
  std::size_t cells = table.size();

  CheckOutcome second = exhaustive_check(theorem1, 4, true, &table);
  CHECK(second.checked == 10);
  CHECK(table.size() == cells);  // pure cache hits the second time
}

TEST_CASE("fuzzing is reproducible and rejects bad arguments") {
  const CorpusEntry& theorem2 = *find_entry("theorem2");

  CHECK_THROWS_AS(fuzz_check(theorem2, {FuzzModel::ErdosRenyi}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(fuzz_check(theorem2, {}, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(fuzz_model_from_name("triangular"), std::invalid_argument);
  CHECK(fuzz_model_from_name("er") == FuzzModel::ErdosRenyi);
  CHECK(fuzz_model_from_name("regular") == FuzzModel::Regular);
  CHECK(fuzz_model_from_name("bipartite") == FuzzModel::Bipartite);

  auto run_fuzz = [&] {
    return fuzz_check(theorem2,
                      {FuzzModel::ErdosRenyi, FuzzModel::Regular,
                       FuzzModel::Bipartite},
                      60, 20260818, 24);
  };
  CheckOutcome a = run_fuzz();
  CheckOutcome b = run_fuzz();
  CHECK(a.checked == b.checked);
  CHECK(a.skipped == b.skipped);
  CHECK(a.counterexample_g6 == b.counterexample_g6);
  CHECK(a.seed == 20260818);
  CHECK(a.checked + a.skipped == 60);
  CHECK_FALSE(a.counterexample.has_value());  // it is a theorem
}

TEST_CASE("fuzzing finds counterexamples to false statements") {
  CorpusEntry bogus = false_residue_upper();
  CheckOutcome out =
      fuzz_check(bogus, {FuzzModel::ErdosRenyi, FuzzModel::Bipartite}, 400, 7, 12);
  REQUIRE(out.counterexample.has_value());
  double alpha = invariant_on(*out.counterexample, "independence_number");
  double residue = invariant_on(*out.counterexample, "residue");
  CHECK(alpha > residue);
  CHECK(out.seed == 7);
}

TEST_CASE("random verification of the workshop conjectures stays clean") {
  // The second workshop conjecture over random graphs (the theta-free entry,
  // so orders can stretch further).
  const CorpusEntry& conjecture2 = *find_entry("conjecture2");
  CheckOutcome out =
      fuzz_check(conjecture2, {FuzzModel::ErdosRenyi}, 200, 99, 40);
  CHECK_FALSE(out.counterexample.has_value());
  CHECK(out.checked + out.skipped == 200);
  CHECK(out.checked > 0);

  // The first workshop conjecture mentions theta, so the order cap tightens
  // to the solver's practical range automatically.
  const CorpusEntry& conjecture1 = *find_entry("conjecture1");
  CheckOutcome theta_out =
      fuzz_check(conjecture1, {FuzzModel::ErdosRenyi, FuzzModel::Regular}, 40,
                 5, 40);
  CHECK_FALSE(theta_out.counterexample.has_value());
  CHECK(theta_out.checked > 0);
}
