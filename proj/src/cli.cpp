#include "ust/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ust/domino.hpp"
#include "ust/error.hpp"
#include "ust/graph_io.hpp"
#include "ust/harmonic.hpp"
#include "ust/limits.hpp"
#include "ust/oracle.hpp"
#include "ust/rooted_tree.hpp"
#include "ust/sampler.hpp"
#include "ust/transfer.hpp"

#ifndef UST_VERSION
#define UST_VERSION "0.0.0"
#endif

namespace ust {

namespace {

using nlohmann::json;

constexpr std::size_t kExactDefaultLimit = 64;

json render(const Rational& q) { return format_rational(q); }
json render(double x) { return x; }

std::string edge_label(EdgeId id) { return "e" + std::to_string(id); }

json edge_labels(const EdgeSet& edges) {
  json out = json::array();
  for (EdgeId id : edges) out.push_back(edge_label(id));
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::size_t parse_index(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorCode::parse_error, "bad " + what + " '" + text + "'");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::out_of_range, what + " '" + text + "' is too large");
  }
}

EdgeId parse_edge_ref(const std::string& text, const Graph& g) {
  const std::string digits = (!text.empty() && (text[0] == 'e' || text[0] == 'E')) ? text.substr(1) : text;
  const EdgeId id = parse_index(digits, "edge reference");
  if (!g.has_edge(id)) throw Error(ErrorCode::out_of_range, "no edge " + edge_label(id));
  return id;
}

std::vector<EdgeId> parse_edge_list(const std::string& text, const Graph& g) {
  std::vector<EdgeId> ids;
  for (const std::string& part : split_list(text)) ids.push_back(parse_edge_ref(part, g));
  return ids;
}

VertexId parse_vertex(const std::string& text, const Graph& g) {
  const VertexId v = parse_index(text, "vertex");
  if (v >= g.vertex_count()) {
    throw Error(ErrorCode::out_of_range, "vertex " + text + " out of range (graph has " +
                                             std::to_string(g.vertex_count()) + " vertices)");
  }
  return v;
}

// Graph source shared by the graph commands: a JSON path (or "-"), or a
// family given by --family/--n. Positional operands after the graph land in
// `operands`.
struct GraphArgs {
  std::vector<std::string> positional;
  std::string family;
  int n = 0;
  bool exact = false;
  bool floating = false;

  std::vector<std::string> operands;

  Graph load() {
    operands = positional;
    if (!family.empty()) {
      if (n <= 0) throw Error(ErrorCode::invalid_argument, "--family needs --n");
      return make_family(parse_family(family), n);
    }
    if (operands.empty()) throw Error(ErrorCode::invalid_argument, "no graph given (path, '-' or --family)");
    const std::string path = operands.front();
    operands.erase(operands.begin());
    return load_graph(path);
  }

  NumericMode mode(const Graph& g) const {
    if (exact && floating) throw Error(ErrorCode::invalid_argument, "--exact and --float are exclusive");
    if (exact) return NumericMode::exact;
    if (floating) return NumericMode::floating;
    if (const char* env = std::getenv("UST_NUMERIC"); env != nullptr && *env != '\0') {
      const std::string value(env);
      if (value == "exact") return NumericMode::exact;
      if (value == "float") return NumericMode::floating;
      throw Error(ErrorCode::invalid_argument, "UST_NUMERIC must be 'exact' or 'float', got '" + value + "'");
    }
    return g.vertex_count() <= kExactDefaultLimit ? NumericMode::exact : NumericMode::floating;
  }

  void require_operands(std::size_t count, const char* usage) const {
    if (operands.size() != count) throw Error(ErrorCode::invalid_argument, std::string("usage: ") + usage);
  }
};

void add_graph_options(CLI::App* sub, GraphArgs& args, bool numeric) {
  sub->add_option("args", args.positional, "Graph JSON path ('-' for stdin), then operands");
  sub->add_option("--family", args.family, "Built-in family: complete, torus, hypercube, path, cycle, grid");
  sub->add_option("--n", args.n, "Family size parameter");
  if (numeric) {
    sub->add_flag("--exact", args.exact, "Exact rational arithmetic");
    sub->add_flag("--float", args.floating, "Double precision arithmetic");
  }
}

template <Scalar T>
json prob_payload(const Graph& g, const CylinderEvent& ev) {
  const T p = g.is_unweighted() ? prob_cylinder<T>(g, ev) : prob_cylinder_weighted<T>(g, ev);
  return {{"in", edge_labels(ev.include)}, {"out", edge_labels(ev.exclude)}, {"p", render(p)}};
}

template <Scalar T>
json resistance_payload(const Graph& g, VertexId a, VertexId b) {
  return {{"a", a}, {"b", b}, {"resistance", render(effective_resistance<T>(g, a, b))}};
}

template <Scalar T>
json voltage_payload(const Graph& g, VertexId a, VertexId b) {
  const Potential<T> v = hitting_voltage<T>(g, a, b);
  json values = json::object();
  for (VertexId x = 0; x < g.vertex_count(); ++x) values[std::to_string(x)] = render(v[x]);
  return {{"source", a}, {"sink", b}, {"voltage", std::move(values)}};
}

template <Scalar T>
json impedance_payload(const Graph& g, const std::vector<EdgeId>& ids) {
  std::vector<OrientedEdge> edges;
  for (EdgeId id : ids) edges.push_back(g.canonical_orientation(id));
  const TransferMatrix<T> m = impedance_matrix<T>(g, edges);
  json rows = json::array();
  for (std::size_t i = 0; i < m.entries.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.entries.cols(); ++j) row.push_back(render(m.entries(i, j)));
    rows.push_back(std::move(row));
  }
  json labels = json::array();
  for (const OrientedEdge& e : edges) {
    labels.push_back({{"edge", edge_label(e.edge)}, {"tail", g.tail(e)}, {"head", g.head(e)}});
  }
  return {{"edges", std::move(labels)}, {"matrix", std::move(rows)}, {"determinant", render(determinant(m.entries))}};
}

json kn_payload(int n, NumericMode mode) {
  const std::map<int, Rational> pmf = kn_degree_pmf(n);
  json table = json::object();
  for (const auto& [k, p] : pmf) {
    table[std::to_string(k)] = mode == NumericMode::exact ? render(p) : render(p.get_d());
  }
  json moments = json::object();
  for (int r = 1; r <= 3; ++r) {
    const Rational m = falling_factorial_moment(pmf, r);
    moments[std::to_string(r)] = mode == NumericMode::exact ? render(m) : render(m.get_d());
  }
  return {{"n", n}, {"pmf", std::move(table)}, {"factorial_moments", std::move(moments)}};
}

json estimate_json(const MonteCarloEstimate& est) {
  return {{"mean", est.mean}, {"std_error", est.std_error}, {"samples", est.samples}};
}

json tiling_json(const DominoTiling& tiling) {
  json dominoes = json::array();
  for (const Domino& d : tiling.dominoes) {
    dominoes.push_back(json::array({json::array({d.a.x, d.a.y}), json::array({d.b.x, d.b.y})}));
  }
  return {{"m", tiling.m}, {"side", tiling.side()}, {"removed", json::array({0, 0})}, {"dominoes", std::move(dominoes)}};
}

const char* mode_name(NumericMode mode) { return mode == NumericMode::exact ? "exact" : "float"; }

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniform and weighted spanning tree toolkit", "ust"};
  app.require_subcommand(1);
  app.set_version_flag("--version", UST_VERSION);

  GraphArgs ga;
  std::string in_edges;
  std::string out_edges;
  std::string edges_arg;
  std::string source;
  std::string sink;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  std::uint64_t samples = 10000;
  std::string start = "0";
  unsigned threads = 1;
  bool census = false;
  int n = 0;
  int m = 0;
  int r = 0;
  int grid = 1024;
  bool integral = false;
  std::string tree_text;
  std::optional<std::string> moment_tree;

  CLI::App* count = app.add_subcommand("count", "Weighted spanning tree count (matrix-tree theorem)");
  add_graph_options(count, ga, false);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List every spanning tree");
  add_graph_options(enumerate, ga, false);

  CLI::App* prob = app.add_subcommand("prob", "Probability that --in edges are in and --out edges are out");
  add_graph_options(prob, ga, true);
  prob->add_option("--in", in_edges, "Edges required in the tree, e.g. e0,e3");
  prob->add_option("--out", out_edges, "Edges required out of the tree");

  CLI::App* sample = app.add_subcommand("sample", "Random walk sampling");
  add_graph_options(sample, ga, false);
  sample->add_option("--start", start, "Start vertex of the walk");
  sample->add_option("--seed", seed, "RNG seed");
  sample->add_option("--trials", trials, "Number of trees; >1 reports edge frequencies")->check(CLI::PositiveNumber);
  sample->add_flag("--census", census, "Count whole trees instead of edges");
  sample->add_option("--threads", threads, "Worker threads (output does not depend on it)")->check(CLI::PositiveNumber);

  CLI::App* census_cmd = app.add_subcommand("census", "Whole-tree counts over sampled trees");
  add_graph_options(census_cmd, ga, false);
  census_cmd->add_option("--start", start, "Start vertex of the walk");
  census_cmd->add_option("--seed", seed, "RNG seed");
  census_cmd->add_option("--trials", trials, "Number of trees")->check(CLI::PositiveNumber);
  census_cmd->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

  CLI::App* resistance = app.add_subcommand("resistance", "Effective resistance: resistance <graph> a b");
  add_graph_options(resistance, ga, true);

  CLI::App* voltage = app.add_subcommand("voltage", "Harmonic function, 1 at --source and 0 at --sink");
  add_graph_options(voltage, ga, true);
  voltage->add_option("--source", source, "Vertex held at 1")->required();
  voltage->add_option("--sink", sink, "Vertex held at 0")->required();

  CLI::App* impedance = app.add_subcommand("impedance", "Transfer impedance matrix over --edges");
  add_graph_options(impedance, ga, true);
  impedance->add_option("--edges", edges_arg, "Edges, e.g. e0,e1")->required();

  CLI::App* torus = app.add_subcommand("torus-potential", "Fourier potential table on the n x n torus");
  torus->add_option("n", n, "Torus side")->required();

  CLI::App* kn = app.add_subcommand("kn-degree", "Exact degree distribution of a vertex of K_n");
  kn->add_option("n", n, "Number of vertices (3..12)")->required();
  bool kn_float = false;
  kn->add_flag("--float", kn_float, "Render as doubles");

  CLI::App* gw = app.add_subcommand("gw-moment", "Monte Carlo tree moment of a critical Poisson tree");
  gw->add_option("--tree", tree_text, "Rooted tree, each '(' opens a child")->required();
  gw->add_option("--samples", samples, "Sample count")->check(CLI::Range(2ULL, 100000000ULL));
  gw->add_option("--seed", seed, "RNG seed");

  CLI::App* entropy = app.add_subcommand("entropy", "Spanning tree entropy of the square lattice");
  auto* entropy_n = entropy->add_option("--n", n, "Finite torus side");
  auto* entropy_integral = entropy->add_flag("--integral", integral, "Evaluate the limiting integral");
  entropy->add_option("--grid", grid, "Quadrature grid for --integral");
  entropy_n->excludes(entropy_integral);

  CLI::App* domino = app.add_subcommand("domino", "Domino tiling from a spanning tree of the m x m grid");
  domino->add_option("--m", m, "Grid side")->required();
  domino->add_option("--tree", tree_text, "Tree edges, e.g. e0,e2,e3")->required();

  CLI::App* incipient = app.add_subcommand("incipient", "Sample the incipient infinite cluster to height r");
  incipient->add_option("--r", r, "Backbone length")->required();
  incipient->add_option("--seed", seed, "RNG seed");
  incipient->add_option("--moment", moment_tree, "Also estimate the moment of this rooted tree");
  incipient->add_option("--samples", samples, "Sample count for --moment")->check(CLI::Range(2ULL, 100000000ULL));

  CLI::App* bitrees = app.add_subcommand("bitrees", "Two-component forest weight: bitrees <graph> a b");
  add_graph_options(bitrees, ga, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  CLI::App* cmd = app.get_subcommands().front();
  json result;
  std::optional<NumericMode> mode;
  try {
    if (cmd == count) {
      const Graph g = ga.load();
      ga.require_operands(0, "count <graph>");
      result = {{"count", render(matrix_tree_count(g))}};
      mode = NumericMode::exact;
    } else if (cmd == enumerate) {
      const Graph g = ga.load();
      ga.require_operands(0, "enumerate <graph>");
      const TreeEnumeration trees = enumerate_spanning_trees(g);
      json list = json::array();
      for (const EdgeSet& t : trees.trees) list.push_back(edge_labels(t));
      result = {{"count", trees.trees.size()}, {"total_weight", render(trees.total_weight)}, {"trees", std::move(list)}};
      mode = NumericMode::exact;
    } else if (cmd == prob) {
      const Graph g = ga.load();
      ga.require_operands(0, "prob <graph> --in e0,e3 [--out e1]");
      CylinderEvent ev;
      for (EdgeId id : parse_edge_list(in_edges, g)) ev.include.insert(id);
      for (EdgeId id : parse_edge_list(out_edges, g)) ev.exclude.insert(id);
      mode = ga.mode(g);
      result = *mode == NumericMode::exact ? prob_payload<Rational>(g, ev) : prob_payload<double>(g, ev);
    } else if (cmd == sample || cmd == census_cmd) {
      const Graph g = ga.load();
      ga.require_operands(0, "sample <graph> [--start v] [--seed s] [--trials N]");
      const VertexId v = parse_vertex(start, g);
      result = {{"start", v}, {"seed", seed}, {"trials", trials}};
      mode = NumericMode::exact;
      if (cmd == census_cmd || census) {
        json table = json::object();
        for (const auto& [key, hits] : sample_tree_census(g, trials, seed, v, threads)) table[key] = hits;
        result["census"] = std::move(table);
      } else if (trials == 1) {
        result["tree"] = edge_labels(aldous_broder(g, v, derive_seed(seed, 0)).edges());
      } else {
        json table = json::object();
        for (const auto& [id, f] : sample_frequencies(g, trials, seed, v, threads)) table[edge_label(id)] = f;
        result["frequencies"] = std::move(table);
        mode = NumericMode::floating;
      }
    } else if (cmd == resistance) {
      const Graph g = ga.load();
      ga.require_operands(2, "resistance <graph> a b");
      const VertexId a = parse_vertex(ga.operands[0], g);
      const VertexId b = parse_vertex(ga.operands[1], g);
      mode = ga.mode(g);
      result = *mode == NumericMode::exact ? resistance_payload<Rational>(g, a, b) : resistance_payload<double>(g, a, b);
    } else if (cmd == voltage) {
      const Graph g = ga.load();
      ga.require_operands(0, "voltage <graph> --source a --sink b");
      const VertexId a = parse_vertex(source, g);
      const VertexId b = parse_vertex(sink, g);
      mode = ga.mode(g);
      result = *mode == NumericMode::exact ? voltage_payload<Rational>(g, a, b) : voltage_payload<double>(g, a, b);
    } else if (cmd == impedance) {
      const Graph g = ga.load();
      ga.require_operands(0, "impedance <graph> --edges e0,e1");
      const std::vector<EdgeId> ids = parse_edge_list(edges_arg, g);
      mode = ga.mode(g);
      result = *mode == NumericMode::exact ? impedance_payload<Rational>(g, ids) : impedance_payload<double>(g, ids);
    } else if (cmd == torus) {
      const auto table = torus_potential_table(n);
      json rows = json::array();
      json volts = json::array();
      const double top = table[0][0];
      for (const auto& row : table) {
        rows.push_back(row);
        json v = json::array();
        for (double x : row) v.push_back(x / top);
        volts.push_back(std::move(v));
      }
      result = {{"n", n}, {"potential", std::move(rows)}, {"voltage", std::move(volts)}};
      mode = NumericMode::floating;
    } else if (cmd == kn) {
      mode = kn_float ? NumericMode::floating : NumericMode::exact;
      result = kn_payload(n, *mode);
    } else if (cmd == gw) {
      const RootedTree t = RootedTree::parse(tree_text);
      result = estimate_json(gw_tree_moment(t, samples, seed));
      result["tree"] = t.encode();
      result["seed"] = seed;
      mode = NumericMode::floating;
    } else if (cmd == entropy) {
      if (integral) {
        result = {{"grid", grid}, {"entropy", spanning_tree_entropy_integral(grid)}};
      } else {
        if (n == 0) throw Error(ErrorCode::invalid_argument, "entropy needs --n N or --integral");
        result = {{"n", n}, {"entropy", spanning_tree_entropy_finite(n)}};
      }
      mode = NumericMode::floating;
    } else if (cmd == domino) {
      const Graph g = make_family(Family::grid, m);
      EdgeSet tree;
      for (EdgeId id : parse_edge_list(tree_text, g)) tree.insert(id);
      result = tiling_json(temperley_matching(m, tree));
      mode = NumericMode::exact;
    } else if (cmd == incipient) {
      const RootedTree t = incipient_cluster_sample(r, seed);
      result = {{"r", r}, {"seed", seed}, {"tree", t.encode()}, {"size", t.size()}, {"height", t.height()}};
      if (moment_tree) {
        const RootedTree pattern = RootedTree::parse(*moment_tree);
        result["moment"] = estimate_json(incipient_tree_moment(pattern, r, samples, seed));
        result["moment"]["tree"] = pattern.encode();
      }
      mode = NumericMode::floating;
    } else if (cmd == bitrees) {
      const Graph g = ga.load();
      ga.require_operands(2, "bitrees <graph> a b");
      const VertexId a = parse_vertex(ga.operands[0], g);
      const VertexId b = parse_vertex(ga.operands[1], g);
      const Rational num = bitree_weight_sum(g, a, b);
      const Rational den = matrix_tree_count(g);
      Rational ratio = num / den;
      ratio.canonicalize();
      result = {{"a", a}, {"b", b}, {"bitree_weight", render(num)}, {"tree_weight", render(den)}, {"resistance", render(ratio)}};
      mode = NumericMode::exact;
    }
  } catch (const Error& e) {
    err << json{{"error", std::string(code_name(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }

  json envelope = {{"command", cmd->get_name()}, {"version", UST_VERSION}};
  envelope["numeric_mode"] = mode ? json(mode_name(*mode)) : json(nullptr);
  for (auto& [key, value] : result.items()) envelope[key] = value;
  out << envelope.dump() << '\n';
  return 0;
}

}  // namespace ust
