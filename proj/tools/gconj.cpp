// Command-line front end: compute invariants, run conjecturing, verify the
// built-in statements, hunt counterexamples, and maintain the value store.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "gconj/canonical.hpp"
#include "gconj/catalog.hpp"
#include "gconj/config.hpp"
#include "gconj/corpus.hpp"
#include "gconj/engine.hpp"
#include "gconj/expr_parse.hpp"
#include "gconj/gen.hpp"
#include "gconj/graph6.hpp"
#include "gconj/harness.hpp"
#include "gconj/invariants.hpp"
#include "gconj/random_graphs.hpp"
#include "gconj/rng.hpp"
#include "gconj/store.hpp"
#include "gconj/value_table.hpp"

namespace {

using namespace gconj;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

// ---------------------------------------------------------------- utilities

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  auto push = [&] {
    std::size_t b = cur.find_first_not_of(" \t");
    if (b == std::string::npos) {
      cur.clear();
      return;
    }
    std::size_t e = cur.find_last_not_of(" \t");
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : text) {
    if (c == sep) {
      push();
    } else {
      cur += c;
    }
  }
  push();
  return out;
}

std::vector<std::string> split_all(const std::vector<std::string>& args, char sep) {
  std::vector<std::string> out;
  for (const std::string& a : args)
    for (std::string& piece : split_list(a, sep)) out.push_back(std::move(piece));
  return out;
}

Direction parse_direction(const std::string& text) {
  if (text == "upper" || text == "<=") return Direction::Upper;
  if (text == "lower" || text == ">=") return Direction::Lower;
  throw std::invalid_argument("direction must be 'upper' or 'lower', got '" +
                              text + "'");
}

InvariantSymbol named_symbol(const std::string& name) {
  int id = invariant_id(name);
  if (id < 0) throw std::invalid_argument("unknown invariant: " + name);
  return {id, name};
}

std::string graph_label(const Graph& g) {
  return g.name().empty() ? write_graph6(g) : g.name();
}

// ------------------------------------------------------------ graph sources

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in.is_open()) throw std::invalid_argument("cannot read graph file " + path);
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#' || line.rfind(">>", 0) == 0) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
  return out;
}

int parse_range_int(const std::string& text, const char* what, int lo, int hi) {
  try {
    std::size_t used = 0;
    int v = std::stoi(text, &used);
    if (used == text.size() && v >= lo && v <= hi) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("bad ") + what + ": '" + text + "'");
}

double parse_prob(const std::string& text) {
  try {
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used == text.size() && v >= 0.0 && v <= 1.0) return v;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument("bad probability: '" + text + "'");
}

// One --graphs token can be a catalog name, `catalog:NAME`, `g6:STRING`,
// `file:PATH`, `gen:connected:N`, `gen:all:N`, or a random-model spec
// `er:N:P:SEED` / `regular:N:D:SEED` / `bipartite:A:B:P:SEED`.
std::vector<Graph> graphs_from_source(const std::string& src) {
  std::vector<std::string> parts = split_list(src, ':');
  if (parts.empty()) throw std::invalid_argument("empty graph source");

  const std::string& head = parts[0];
  if (head == "catalog" && parts.size() == 2) return {catalog_graph(parts[1])};
  if (head == "g6" && parts.size() == 2) return {parse_graph6(parts[1])};
  if (head == "file" && parts.size() == 2) return read_graph6_file(parts[1]);
  if (head == "gen" && parts.size() == 3) {
    int n = parse_range_int(parts[2], "generator order", 1, 8);
    if (parts[1] == "connected") return connected_graphs(n);
    if (parts[1] == "all") return all_graphs(n);
    throw std::invalid_argument("generator class must be 'connected' or 'all'");
  }
  if (head == "er" && parts.size() == 4) {
    int n = parse_range_int(parts[1], "order", 1, 64);
    double p = parse_prob(parts[2]);
    Rng rng(static_cast<std::uint64_t>(
        parse_range_int(parts[3], "seed", 0, 1000000000)));
    Graph g = random_er(n, p, rng);
    g.set_name(src);
    return {g};
  }
  if (head == "regular" && parts.size() == 4) {
    int n = parse_range_int(parts[1], "order", 1, 64);
    int d = parse_range_int(parts[2], "degree", 0, 63);
    Rng rng(static_cast<std::uint64_t>(
        parse_range_int(parts[3], "seed", 0, 1000000000)));
    Graph g = random_regular(n, d, rng);
    g.set_name(src);
    return {g};
  }
  if (head == "bipartite" && parts.size() == 5) {
    int a = parse_range_int(parts[1], "side", 1, 63);
    int b = parse_range_int(parts[2], "side", 1, 63);
    double p = parse_prob(parts[3]);
    Rng rng(static_cast<std::uint64_t>(
        parse_range_int(parts[4], "seed", 0, 1000000000)));
    Graph g = random_bipartite(a, b, p, rng);
    g.set_name(src);
    return {g};
  }
  if (parts.size() == 1) return {catalog_graph(head)};
  throw std::invalid_argument("unrecognized graph source: " + src);
}

std::vector<Graph> graphs_from_sources(const std::vector<std::string>& sources) {
  std::vector<Graph> out;
  for (const std::string& src : sources)
    for (Graph& g : graphs_from_source(src)) out.push_back(std::move(g));
  return out;
}

// ------------------------------------------------------------ store session

// Keeps the on-disk store append-only: remembers which cells were loaded and
// appends exactly the cells this run added.
struct StoreSession {
  std::string path;
  ValueTable table;
  std::set<std::pair<std::string, std::string>> known;

  void open(const std::string& p) {
    path = p;
    if (path.empty()) return;
    table = load_table(path);
    table.for_each([&](const std::string& key, const std::string& invariant,
                       const ValueTable::Cell&) { known.emplace(key, invariant); });
  }

  void flush() {
    if (path.empty()) return;
    std::vector<std::tuple<std::string, std::string, ValueTable::Cell>> fresh;
    table.for_each([&](const std::string& key, const std::string& invariant,
                       const ValueTable::Cell& cell) {
      if (!known.count({key, invariant})) fresh.emplace_back(key, invariant, cell);
    });
    if (fresh.empty()) return;
    StoreWriter writer(path);
    for (auto& [key, invariant, cell] : fresh) {
      writer.append(key, invariant, cell);
      known.emplace(key, invariant);
    }
  }
};

void append_witness(const std::string& path, const CorpusEntry& entry,
                    const std::string& g6, const std::string& how) {
  std::ofstream out(path, std::ios::app);
  if (!out.is_open())
    throw std::invalid_argument("cannot append counterexamples to " + path);
  out << "# violates " << entry_line(entry) << " (" << how << ")\n"
      << g6 << "\n";
}

// ------------------------------------------------------- command: compute

struct ComputeArgs {
  std::vector<std::string> graphs;
  std::vector<std::string> invariants;
};

int cmd_compute(const ComputeArgs& args, StoreSession& session) {
  std::vector<Graph> graphs = graphs_from_sources(split_all(args.graphs, ','));
  std::vector<std::string> names = split_all(args.invariants, ',');
  if (graphs.empty()) throw std::invalid_argument("no graphs given");
  if (names.empty()) throw std::invalid_argument("no invariants given");
  for (const std::string& name : names)
    if (find_invariant(name) == nullptr)
      throw std::invalid_argument("unknown invariant: " + name);

  for (const Graph& g : graphs) {
    for (const std::string& name : names) {
      InvariantValue v = session.table.ensure(g, name);
      std::cout << name << "(" << graph_label(g)
                << ") = " << encode_store_value(v.value);
      if (!v.exact) std::cout << "  (within " << v.tolerance << ")";
      std::cout << "\n";
    }
  }
  session.flush();
  return kExitOk;
}

// ---------------------------------------------------- command: conjecture

struct ConjectureArgs {
  std::string target = "independence_number";
  std::string direction = "upper";
  std::vector<std::string> graphs;
  std::vector<std::string> pool;
  std::vector<std::string> constants;
  std::vector<std::string> ops;
  std::vector<std::string> theory;
  int max_complexity = 5;
  long long max_candidates = -1;
  double wall_ms = -1;
  int threads = 1;
};

int cmd_conjecture(const ConjectureArgs& args, StoreSession& session) {
  TargetSpec spec;
  spec.target = named_symbol(args.target);
  spec.direction = parse_direction(args.direction);

  std::vector<std::string> graph_sources = split_all(args.graphs, ',');
  if (graph_sources.empty())  // the four running examples
    graph_sources = {"k5", "c5", "k2_3", "petersen"};
  spec.objects = graphs_from_sources(graph_sources);

  for (const std::string& name : split_all(args.pool, ','))
    spec.pool.push_back(named_symbol(name));
  if (spec.pool.empty())
    throw std::invalid_argument("the invariant pool is empty (--pool)");

  for (const std::string& text : split_all(args.constants, ',')) {
    auto r = Rational::parse(text);
    if (!r) throw std::invalid_argument("bad constant: '" + text + "'");
    spec.constants.push_back(*r);
  }

  for (const std::string& name : split_all(args.ops, ',')) {
    const OperatorSpec* op = find_operator(name);
    if (!op) throw std::invalid_argument("unknown operator: " + name);
    spec.operators.push_back(op->code);
  }
  if (spec.operators.empty())
    throw std::invalid_argument("the operator pool is empty (--ops)");

  SymbolTable symbols = standard_symbol_table();
  for (const std::string& text : args.theory)
    spec.theory.push_back(parse_expression(text, symbols));

  spec.max_complexity = args.max_complexity;
  spec.budget.max_candidates = args.max_candidates;
  spec.budget.wall_ms = args.wall_ms;
  spec.budget.threads = args.threads;

  RunReport report = run(spec, session.table);
  for (const Conjecture& c : report.kept) std::cout << conjecture_text(c) << "\n";
  std::cerr << "examined " << report.examined << " candidates, kept "
            << report.kept.size() << ", pruned " << report.pruned.size()
            << ", " << report.wall_ms << " ms"
            << (report.partial ? " (budget hit, partial)" : "") << "\n";
  session.flush();
  return kExitOk;
}

// -------------------------------------------------------- command: verify

struct VerifyArgs {
  std::vector<std::string> entries;
  int max_order = 7;
  bool all_graphs = false;
  int threads = 1;
  std::string save_path;
};

int cmd_verify(const VerifyArgs& args, StoreSession& session) {
  std::vector<const CorpusEntry*> selected;
  std::vector<std::string> names = split_all(args.entries, ',');
  if (names.empty() || (names.size() == 1 && names[0] == "all")) {
    for (const CorpusEntry& e : builtin_corpus()) selected.push_back(&e);
  } else {
    for (const std::string& name : names) {
      const CorpusEntry* e = find_entry(name);
      if (!e) throw std::invalid_argument("unknown corpus entry: " + name);
      selected.push_back(e);
    }
  }

  ValueTable* table = session.path.empty() ? nullptr : &session.table;
  int exit_code = kExitOk;
  for (const CorpusEntry* entry : selected) {
    CheckOutcome out = exhaustive_check(*entry, args.max_order,
                                        !args.all_graphs, table, args.threads);
    if (out.counterexample.has_value()) {
      exit_code = kExitCounterexample;
      std::cout << entry->name << ": counterexample " << out.counterexample_g6
                << " (order " << out.counterexample->order() << ") after "
                << out.checked << " graphs\n";
      if (!args.save_path.empty())
        append_witness(args.save_path, *entry, out.counterexample_g6,
                       "exhaustive check, max order " +
                           std::to_string(args.max_order));
    } else {
      std::cout << entry->name << ": verified, " << out.checked
                << " graphs checked";
      if (out.skipped > 0) std::cout << " (" << out.skipped << " skipped)";
      std::cout << "\n";
    }
  }
  session.flush();
  return exit_code;
}

// ------------------------------------------- command: search-counterexample

struct SearchArgs {
  std::string entry;
  std::string text;
  std::string direction = "lower";
  bool connected_only = false;
  int min_order = 1;
  std::vector<std::string> models = {"er"};
  int trials = 200;
  std::uint64_t seed = 1;
  int max_order = 40;
  int exhaustive = 0;  // > 0: exhaustive up to this order instead of fuzzing
  std::string save_path;
};

int cmd_search(const SearchArgs& args, StoreSession& session) {
  CorpusEntry entry;
  if (!args.entry.empty()) {
    const CorpusEntry* e = find_entry(args.entry);
    if (!e) throw std::invalid_argument("unknown corpus entry: " + args.entry);
    entry = *e;
  } else if (!args.text.empty()) {
    entry.name = "adhoc";
    entry.text = args.text;
    entry.direction = parse_direction(args.direction);
    entry.connected_only = args.connected_only;
    entry.min_order = args.min_order;
    entry_expression(entry);  // validate the text before the sweep
  } else {
    throw std::invalid_argument("give --entry NAME or --text EXPRESSION");
  }

  ValueTable* table = session.path.empty() ? nullptr : &session.table;
  CheckOutcome out;
  std::string how;
  if (args.exhaustive > 0) {
    out = exhaustive_check(entry, args.exhaustive, entry.connected_only, table);
    how = "exhaustive check, max order " + std::to_string(args.exhaustive);
  } else {
    std::vector<FuzzModel> models;
    for (const std::string& name : split_all(args.models, ','))
      models.push_back(fuzz_model_from_name(name));
    out = fuzz_check(entry, models, args.trials, args.seed, args.max_order, table);
    how = "fuzz, seed " + std::to_string(args.seed);
  }

  session.flush();
  if (out.counterexample.has_value()) {
    std::cout << entry.name << ": counterexample " << out.counterexample_g6
              << " (order " << out.counterexample->order() << ", " << how
              << ")\n";
    if (!args.save_path.empty())
      append_witness(args.save_path, entry, out.counterexample_g6, how);
    return kExitCounterexample;
  }
  std::cout << entry.name << ": no violation in " << out.checked
            << " graphs checked (" << out.skipped << " skipped, " << how
            << ")\n";
  return kExitOk;
}

// ------------------------------------------------------- command: catalog

int cmd_catalog() {
  std::cout << "name\torder\tsize\tgraph6\n";
  for (const Graph& g : catalog())
    std::cout << g.name() << "\t" << g.order() << "\t" << g.size() << "\t"
              << write_graph6(g) << "\n";
  std::cout << "\nbuilt-in statements:\n";
  for (const CorpusEntry& e : builtin_corpus())
    std::cout << e.name << ": " << entry_line(e)
              << (e.connected_only ? "  [connected graphs" : "  [all graphs")
              << (e.min_order > 1
                      ? ", order >= " + std::to_string(e.min_order) + "]"
                      : "]")
              << "\n";
  return kExitOk;
}

// -------------------------------------------------------- command: ingest

struct IngestArgs {
  std::string file;
  std::vector<std::string> invariants = {"order", "size"};
};

int cmd_ingest(const IngestArgs& args, StoreSession& session) {
  if (session.path.empty())
    throw std::invalid_argument(
        "ingest needs a store (--store or GCONJ_STORE)");
  std::vector<Graph> graphs = read_graph6_file(args.file);
  std::vector<std::string> names = split_all(args.invariants, ',');
  for (const std::string& name : names)
    if (find_invariant(name) == nullptr)
      throw std::invalid_argument("unknown invariant: " + name);

  long long cells = 0;
  for (const Graph& g : graphs)
    for (const std::string& name : names) {
      session.table.ensure(g, name);
      ++cells;
    }
  session.flush();
  std::cout << "ingested " << graphs.size() << " graphs, " << cells
            << " cells into " << session.path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graph-invariant conjecturing workbench: computes invariants, emits "
      "simplest true significant bounds, and verifies or refutes statements "
      "about the independence number."};
  app.require_subcommand(1);

  std::string store_path;
  if (const char* env = std::getenv("GCONJ_STORE")) store_path = env;
  app.add_option("--store", store_path,
                 "value store file (default: $GCONJ_STORE)")
      ->capture_default_str();
  std::string config_path;
  app.add_option("--config", config_path, "key=value run configuration file");

  ComputeArgs compute_args;
  CLI::App* compute = app.add_subcommand("compute", "compute invariant values");
  compute->add_option("--graphs", compute_args.graphs,
                      "graph sources (catalog name, catalog:NAME, g6:STRING, "
                      "file:PATH, gen:connected:N, gen:all:N, er:N:P:SEED, "
                      "regular:N:D:SEED, bipartite:A:B:P:SEED)")
      ->required();
  compute->add_option("--invariants", compute_args.invariants,
                      "invariant names, comma separated")
      ->required();

  ConjectureArgs conj_args;
  CLI::App* conjecture =
      app.add_subcommand("conjecture", "emit simplest true significant bounds");
  conjecture->add_option("--target", conj_args.target, "bounded invariant")
      ->capture_default_str();
  conjecture->add_option("--direction", conj_args.direction, "upper or lower")
      ->capture_default_str();
  conjecture->add_option("--graphs", conj_args.graphs,
                         "stored objects (default: k5,c5,k2_3,petersen)");
  conjecture->add_option("--pool", conj_args.pool, "bounding invariants");
  conjecture->add_option("--constants", conj_args.constants,
                         "rational constants, e.g. 1,2,1/2");
  conjecture->add_option("--ops", conj_args.ops,
                         "operators: add,sub,mul,div,pow,min,max,sqrt,floor,"
                         "ceil,log,tan,arccosh");
  conjecture->add_option("--theory", conj_args.theory,
                         "known bound expression (repeatable)");
  conjecture->add_option("--max-complexity", conj_args.max_complexity,
                         "expression size cap")
      ->capture_default_str();
  conjecture->add_option("--max-candidates", conj_args.max_candidates,
                         "candidate budget (-1: unlimited)");
  conjecture->add_option("--wall-ms", conj_args.wall_ms,
                         "time budget in ms (-1: unlimited)");
  conjecture->add_option("--threads", conj_args.threads, "evaluation threads");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "exhaustively check built-in statements");
  verify->add_option("--entry", verify_args.entries,
                     "corpus entries (default: all)");
  verify->add_option("--max-order", verify_args.max_order,
                     "largest graph order to generate (<= 8)")
      ->capture_default_str();
  verify->add_flag("--all-graphs", verify_args.all_graphs,
                   "generate disconnected graphs too");
  verify->add_option("--threads", verify_args.threads, "verdict threads");
  verify->add_option("--save-counterexamples", verify_args.save_path,
                     "append witnesses to this graph6 file");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand(
      "search-counterexample", "hunt for violations of a statement");
  search->add_option("--entry", search_args.entry, "corpus entry name");
  search->add_option("--text", search_args.text,
                     "ad-hoc bound expression, e.g. 'residue(x)'");
  search->add_option("--direction", search_args.direction,
                     "for --text: upper or lower")
      ->capture_default_str();
  search->add_flag("--connected-only", search_args.connected_only,
                   "for --text: claim connected graphs only");
  search->add_option("--min-order", search_args.min_order,
                     "for --text: smallest claimed order");
  search->add_option("--models", search_args.models,
                     "random models: er,regular,bipartite")
      ->capture_default_str();
  search->add_option("--trials", search_args.trials, "fuzz trials")
      ->capture_default_str();
  search->add_option("--seed", search_args.seed, "fuzz seed")
      ->capture_default_str();
  search->add_option("--max-order", search_args.max_order,
                     "largest random order (auto-capped per invariant)")
      ->capture_default_str();
  search->add_option("--exhaustive", search_args.exhaustive,
                     "instead: check every graph up to this order (<= 8)");
  search->add_option("--save", search_args.save_path,
                     "append witnesses to this graph6 file");

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "list built-in graphs and statements");

  IngestArgs ingest_args;
  CLI::App* ingest =
      app.add_subcommand("ingest", "precompute invariants for a graph6 file");
  ingest->add_option("--file", ingest_args.file, "graph6 input file")
      ->required();
  ingest->add_option("--invariants", ingest_args.invariants,
                     "invariants to precompute")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    // A config file fills in flags the command line left at their defaults.
    if (!config_path.empty()) {
      Config cfg = Config::load(config_path);
      auto fill = [&](const char* key, auto& slot, CLI::App* cmd,
                      const std::string& flag) {
        if (!cfg.has(key)) return;
        if (cmd->count(flag) > 0) return;  // explicit flag wins
        std::stringstream ss(cfg.get(key));
        ss >> slot;
      };
      auto fill_list = [&](const char* key, std::vector<std::string>& slot,
                           CLI::App* cmd, const std::string& flag) {
        if (!cfg.has(key)) return;
        if (cmd->count(flag) > 0) return;
        slot = split_list(cfg.get(key), ',');
      };
      if (cfg.has("store") && app.count("--store") == 0 && store_path.empty())
        store_path = cfg.get("store");
      fill("target", conj_args.target, conjecture, "--target");
      fill("direction", conj_args.direction, conjecture, "--direction");
      fill_list("graphs", conj_args.graphs, conjecture, "--graphs");
      fill_list("pool", conj_args.pool, conjecture, "--pool");
      fill_list("constants", conj_args.constants, conjecture, "--constants");
      fill_list("ops", conj_args.ops, conjecture, "--ops");
      fill("max_complexity", conj_args.max_complexity, conjecture,
           "--max-complexity");
      fill("max_candidates", conj_args.max_candidates, conjecture,
           "--max-candidates");
      fill("wall_ms", conj_args.wall_ms, conjecture, "--wall-ms");
      fill("threads", conj_args.threads, conjecture, "--threads");
      if (cfg.has("theory") && conjecture->count("--theory") == 0)
        conj_args.theory = split_list(cfg.get("theory"), ';');
    }

    StoreSession session;
    session.open(store_path);

    if (compute->parsed()) return cmd_compute(compute_args, session);
    if (conjecture->parsed()) return cmd_conjecture(conj_args, session);
    if (verify->parsed()) return cmd_verify(verify_args, session);
    if (search->parsed()) return cmd_search(search_args, session);
    if (catalog_cmd->parsed()) return cmd_catalog();
    if (ingest->parsed()) return cmd_ingest(ingest_args, session);
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
