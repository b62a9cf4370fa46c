#pragma once

// Command-line front end. Kept in a header so the test suite can drive it
// in-process; tools/main.cpp only forwards argv.

#include "extremal/extremal.hpp"
#include "extremal/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

namespace extremal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitBudget = 3;
// Anything else non-zero (1) is an internal error, e.g. a failed duality check.

/// Everything one invocation needs; filled in by the argument parser.
struct RunConfig {
  std::string command;
  std::optional<std::string> graph;
  std::optional<std::string> builtin;
  std::optional<std::string> family;
  std::optional<std::string> beta;
  std::optional<std::string> bracket;
  std::string q = "1/sqrt2";
  std::string q1 = "1";
  std::string q2 = "1/sqrt2";
  std::string n_list = "30,60,120";
  std::string epsilon = "1/10";
  int q_grid = 256;
  double tol = 1e-10;
  int max_v = 5;
  int n = 0;
  int e = 0;
  std::uint64_t budget = kDefaultNodeBudget;
  std::optional<std::string> out;
  std::optional<std::string> format;
};

/// q as a decimal in [0, 1], or the literal "1/sqrt2".
inline double parse_q(const std::string& text) {
  if (text == "1/sqrt2" || text == "1/sqrt(2)") {
    return 1.0 / std::sqrt(2.0);
  }
  std::size_t used = 0;
  double q = 0.0;
  try {
    q = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("not a q value: '" + text + "'");
  }
  if (used != text.size() || !(q >= 0.0 && q <= 1.0)) {
    throw InvalidArgument("q must be a number in [0, 1] or 1/sqrt2, got '" + text + "'");
  }
  return q;
}

inline double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(text, &used);
  } catch (const std::exception&) {
    throw InvalidArgument("bad " + what + ": '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(x)) {
    throw InvalidArgument("bad " + what + ": '" + text + "'");
  }
  return x;
}

inline std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) {
    parts.push_back(part);
  }
  return parts;
}

/// "lo:hi:steps", linearly spaced, endpoints included.
inline std::vector<double> parse_beta_grid(const std::string& text) {
  auto parts = split(text, ':');
  if (parts.size() != 3) {
    throw InvalidArgument("beta grid must look like lo:hi:steps");
  }
  double lo = parse_real(parts[0], "beta");
  double hi = parse_real(parts[1], "beta");
  int steps = static_cast<int>(parse_real(parts[2], "step count"));
  if (lo < 0.0 || hi > 1.0) {
    throw InvalidArgument("beta grid must lie inside [0, 1]");
  }
  return linear_grid(lo, hi, steps);
}

inline Graph builtin_graph(const std::string& name) {
  std::smatch m;
  if (name == "G6") {
    return g6_graph();
  }
  if (std::regex_match(name, m, std::regex(R"(P_?(\d+))"))) {
    return path_graph(std::stoi(m[1]));
  }
  if (std::regex_match(name, m, std::regex(R"(K_?(\d+))"))) {
    return complete_graph(std::stoi(m[1]));
  }
  if (std::regex_match(name, m, std::regex(R"(C_?(\d+))"))) {
    return cycle_graph(std::stoi(m[1]));
  }
  if (std::regex_match(name, m, std::regex(R"(star_?(\d+))"))) {
    return star_graph(std::stoi(m[1]));
  }
  throw InvalidArgument("unknown builtin graph '" + name +
                        "' (expected G6, P<k>, K<k>, C<k> or star_<k>)");
}

/// "edges:<list>", "g6:<text>", or either form bare. graph6 never contains
/// '-', ',' or ';', so those characters select the edge-list reader even
/// after a "g6:" prefix.
inline Graph graph_from_text(const std::string& text) {
  if (text.rfind("g6:", 0) == 0) {
    std::string rest = text.substr(3);
    if (rest.find_first_of("-,;") != std::string::npos) {
      return parse_edge_list(rest);
    }
    return parse_graph6(rest);
  }
  if (text.rfind("edges:", 0) == 0) {
    return parse_edge_list(text.substr(6));
  }
  if (text.find_first_of("-,;") != std::string::npos) {
    return parse_edge_list(text);
  }
  return parse_graph6(text);
}

inline Graph resolve_graph(const RunConfig& cfg) {
  int sources = cfg.graph.has_value() + cfg.builtin.has_value() + cfg.family.has_value();
  if (sources != 1) {
    throw InvalidArgument("give exactly one of --graph, --builtin, --family");
  }
  if (cfg.graph) {
    return graph_from_text(*cfg.graph);
  }
  if (cfg.builtin) {
    return builtin_graph(*cfg.builtin);
  }
  auto parts = split(*cfg.family, ',');
  if (parts.size() != 2) {
    throw InvalidArgument("--family expects a,b");
  }
  return counterexample_family(static_cast<int>(parse_real(parts[0], "a")),
                               static_cast<int>(parse_real(parts[1], "b")));
}

inline std::string graph_name(const RunConfig& cfg, const Graph& g) {
  if (cfg.builtin) {
    return *cfg.builtin;
  }
  return write_graph6(g);
}

inline std::string format_of(const RunConfig& cfg, const std::string& fallback) {
  std::string f = cfg.format.value_or(fallback);
  if (f != "csv" && f != "json") {
    throw InvalidArgument("--format must be csv or json");
  }
  return f;
}

// ---------------------------------------------------------------------------
// Subcommands; each returns the full output text.

inline std::string cmd_analyze(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  GraphInvariants inv = graph_invariants(g);
  WeightingSpectrum spec(g);
  double q = parse_q(cfg.q);
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "r,y,b,mult\n";
    for (const auto& [c, mult] : spec.entries()) {
      os << c.r << ',' << c.y << ',' << c.b << ',' << mult << '\n';
    }
    return os.str();
  }
  Json j;
  j["graph"] = g.edge_list();
  j["graph6"] = write_graph6(g);
  j["v"] = g.vertex_count();
  j["e"] = g.edge_count();
  j["alpha"] = inv.alpha;
  j["alpha_star"] = to_string(spec.alpha_star());
  j["A"] = to_string(inv.max_independent_set_count);
  j["independent_counts"] = inv.independent_counts;
  j["automorphisms"] = inv.automorphism_count ? Json(*inv.automorphism_count) : Json(nullptr);
  j["weightings"] = spec.weighting_count();
  j["C2"] = to_string(c2_constant(spec));
  j["q"] = json_real(q);
  j["C1"] = (q > 0.0 && q < 1.0) ? json_real(c1_constant(spec, q)) : Json(nullptr);
  j["counterexample"] = is_counterexample(spec);
  j["spectrum"] = to_json(spec);
  return j.dump(2) + "\n";
}

inline std::string cmd_profile(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  WeightingSpectrum spec(g);
  std::vector<double> betas =
      cfg.beta ? parse_beta_grid(*cfg.beta) : linear_grid(0.001, 1.0, 200);
  DensityCurve curve = density_curve(spec, betas, graph_name(cfg, g), cfg.q_grid, cfg.tol);
  if (format_of(cfg, "csv") == "csv") {
    return density_curve_csv(curve);
  }
  Json j;
  j["graph"] = curve.graph_id;
  j["q_grid"] = curve.q_grid;
  Json rows = Json::array();
  for (const auto& s : curve.samples) {
    rows.push_back({{"beta", json_real(s.point.beta)},
                    {"f_T", json_real(s.point.f_T)},
                    {"q_star", json_real(s.point.q_star)},
                    {"t_S", json_real(s.point.t_S)},
                    {"t_K", json_real(s.point.t_K)},
                    {"winner", std::string(1, winner_symbol(s.winner))},
                    {"tie", s.point.tie}});
  }
  j["samples"] = std::move(rows);
  return j.dump(2) + "\n";
}

inline std::string cmd_crossover(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  WeightingSpectrum spec(g);
  double q1 = parse_q(cfg.q1);
  double q2 = parse_q(cfg.q2);
  double tol = std::min(cfg.tol, 1e-12);
  std::vector<double> roots;
  if (cfg.bracket) {
    auto parts = split(*cfg.bracket, ':');
    if (parts.size() != 2) {
      throw InvalidArgument("--bracket expects lo:hi");
    }
    roots.push_back(crossover_beta(spec, q1, q2, parse_real(parts[0], "bracket"),
                                   parse_real(parts[1], "bracket"), tol));
  } else {
    // Every sign change of the difference along the default grid.
    auto grid = default_beta_grid();
    grid.pop_back();  // beta = 1 is a tie for every q
    auto diff = [&](double beta) {
      return t_density(spec, beta, q1) - t_density(spec, beta, q2);
    };
    for (std::size_t i = 1; i < grid.size(); ++i) {
      double a = diff(grid[i - 1]);
      double b = diff(grid[i]);
      if (a != 0.0 && b != 0.0 && std::signbit(a) != std::signbit(b)) {
        roots.push_back(crossover_beta(spec, q1, q2, grid[i - 1], grid[i], tol));
      }
    }
  }
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "index,beta\n";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      os << i << ',' << format_real(roots[i]) << '\n';
    }
    return os.str();
  }
  Json j;
  j["graph"] = graph_name(cfg, g);
  j["q1"] = json_real(q1);
  j["q2"] = json_real(q2);
  Json rs = Json::array();
  for (double r : roots) {
    rs.push_back(json_real(r));
  }
  j["crossovers"] = std::move(rs);
  return j.dump(2) + "\n";
}

inline ClassifierOptions classifier_options(const RunConfig& cfg) {
  ClassifierOptions opt;
  if (cfg.beta) {
    opt.betas = parse_beta_grid(*cfg.beta);
  }
  opt.q_grid = cfg.q_grid;
  opt.refine_tol = cfg.tol;
  return opt;
}

inline std::string cmd_classify(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  TypeClassification c = classify_type(g, classifier_options(cfg), graph_name(cfg, g));
  if (format_of(cfg, "json") == "csv") {
    std::ostringstream os;
    os << "beta,q_star,winner\n";
    for (std::size_t i = 0; i < c.betas.size(); ++i) {
      os << format_real(c.betas[i]) << ',' << format_real(c.q_stars[i]) << ','
         << winner_symbol(c.winners[i]) << '\n';
    }
    return os.str();
  }
  return to_json(c).dump(2) + "\n";
}

inline std::string cmd_classify_all(const RunConfig& cfg) {
  auto rows = sweep_connected_graphs(cfg.max_v, classifier_options(cfg));
  if (format_of(cfg, "csv") == "csv") {
    return sweep_csv(rows);
  }
  Json j = Json::array();
  for (const auto& r : rows) {
    Json row = to_json(r.classification);
    row.erase("samples");
    row["v"] = r.v;
    row["e"] = r.e;
    row["alpha"] = r.alpha;
    row["alpha_star"] = to_string(r.alpha_star);
    row["A"] = r.max_independent_sets;
    row["predicted_start"] = std::string(1, r.predicted);
    row["consistent"] = r.consistent;
    j.push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

inline std::string cmd_oracle(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  double beta = cfg.beta ? parse_real(*cfg.beta, "beta") : 0.2;
  double q = parse_q(cfg.q);
  std::vector<int> ns;
  for (const auto& part : split(cfg.n_list, ',')) {
    ns.push_back(static_cast<int>(parse_real(part, "n")));
  }
  ConvergenceReport report = convergence_report(g, beta, q, ns, cfg.budget);
  if (format_of(cfg, "csv") == "csv") {
    return count_report_csv(report.rows);
  }
  Json j;
  j["graph"] = graph_name(cfg, g);
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"beta", json_real(r.beta)},
                    {"q", json_real(r.q)},
                    {"hom", to_string(r.hom)},
                    {"injective", to_string(r.injective)},
                    {"copies", to_string(r.copies)},
                    {"normalised", json_real(r.normalised)},
                    {"t_reference", json_real(r.t_reference)},
                    {"gap", json_real(r.gap)}});
  }
  j["rows"] = std::move(rows);
  j["gap_constant"] = report.gap_constant ? json_real(*report.gap_constant) : Json(nullptr);
  j["decay_rate"] = report.decay_rate ? json_real(*report.decay_rate) : Json(nullptr);
  return j.dump(2) + "\n";
}

inline std::string cmd_search(const RunConfig& cfg) {
  auto found = search_counterexamples(cfg.max_v);
  if (format_of(cfg, "csv") == "csv") {
    std::ostringstream os;
    os << "graph6,v,e,alpha,alpha_star,edges\n";
    for (const auto& g : found) {
      WeightingSpectrum spec(g);
      os << write_graph6(g) << ',' << g.vertex_count() << ',' << g.edge_count() << ','
         << spec.alpha() << ',' << to_string(spec.alpha_star()) << ",\"" << g.edge_list()
         << "\"\n";
    }
    return os.str();
  }
  Json j = Json::array();
  for (const auto& g : found) {
    WeightingSpectrum spec(g);
    j.push_back({{"graph6", write_graph6(g)},
                 {"edges", g.edge_list()},
                 {"alpha", spec.alpha()},
                 {"alpha_star", to_string(spec.alpha_star())}});
  }
  return j.dump(2) + "\n";
}

inline std::string cmd_lp(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  DualityReport report = duality_check(g, parse_rational(cfg.epsilon));
  if (format_of(cfg, "json") == "csv") {
    return "epsilon,primal,dual,formula\n" + to_string(report.epsilon) + "," +
           to_string(report.primal) + "," + to_string(report.dual) + "," +
           to_string(report.formula) + "\n";
  }
  return to_json(report, g).dump(2) + "\n";
}

inline std::string cmd_ex(const RunConfig& cfg) {
  Graph g = resolve_graph(cfg);
  ExResult ex = exhaustive_ex(cfg.n, cfg.e, g);
  FamilyHost fam = best_family_host(cfg.n, cfg.e, g);
  std::optional<double> ratio;
  if (fam.copies > 0) {
    ratio = to_double(Rational(ex.maximum, fam.copies));
  }
  if (format_of(cfg, "json") == "csv") {
    return "n,e,ex,maximiser,family_best,ratio\n" + std::to_string(cfg.n) + "," +
           std::to_string(cfg.e) + "," + to_string(ex.maximum) + ",\"" +
           ex.maximiser.edge_list() + "\"," + to_string(fam.copies) + "," +
           (ratio ? format_real(*ratio) : "") + "\n";
  }
  Json j;
  j["n"] = cfg.n;
  j["e"] = cfg.e;
  j["ex"] = to_string(ex.maximum);
  j["maximiser"] = ex.maximiser.edge_list();
  j["hosts_examined"] = ex.hosts_examined;
  j["family_best"] = {{"yellow", fam.yellow},
                      {"red", fam.red},
                      {"blue", fam.blue},
                      {"edges", fam.edges},
                      {"copies", to_string(fam.copies)}};
  j["ratio"] = ratio ? json_real(*ratio) : Json(nullptr);
  return j.dump(2) + "\n";
}

inline std::string dispatch(const RunConfig& cfg) {
  if (cfg.command == "analyze") return cmd_analyze(cfg);
  if (cfg.command == "profile") return cmd_profile(cfg);
  if (cfg.command == "crossover") return cmd_crossover(cfg);
  if (cfg.command == "classify") return cmd_classify(cfg);
  if (cfg.command == "classify-all") return cmd_classify_all(cfg);
  if (cfg.command == "oracle") return cmd_oracle(cfg);
  if (cfg.command == "search") return cmd_search(cfg);
  if (cfg.command == "lp") return cmd_lp(cfg);
  if (cfg.command == "ex") return cmd_ex(cfg);
  throw InvalidArgument("unknown command '" + cfg.command + "'");
}

inline void add_graph_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--graph", cfg.graph, "Edge list (1-2,2-3), graph6, or g6:/edges: prefixed");
  sub->add_option("--builtin", cfg.builtin, "G6, P<k>, K<k>, C<k> or star_<k>");
  sub->add_option("--family", cfg.family, "Counterexample family parameters a,b");
}

inline void add_output_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  sub->add_option("--format", cfg.format, "csv or json");
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Subgraph-count maximisation over quasi-star / quasi-clique / T-graph hosts",
               "extremal"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Invariants, weighting spectrum and constants");
  add_graph_options(analyze, cfg);
  analyze->add_option("--q", cfg.q, "q for C1 (decimal or 1/sqrt2)");
  add_output_options(analyze, cfg);

  auto* profile = app.add_subcommand("profile", "f_T, q*, endpoint densities over a beta grid");
  add_graph_options(profile, cfg);
  profile->add_option("--beta", cfg.beta, "lo:hi:steps");
  profile->add_option("--grid", cfg.q_grid, "q grid cells (>= 64)");
  profile->add_option("--tol", cfg.tol, "golden-section tolerance");
  add_output_options(profile, cfg);

  auto* crossover = app.add_subcommand("crossover", "Edge densities where t(q1) = t(q2)");
  add_graph_options(crossover, cfg);
  crossover->add_option("--q1", cfg.q1, "First q");
  crossover->add_option("--q2", cfg.q2, "Second q");
  crossover->add_option("--bracket", cfg.bracket, "lo:hi bracket (default: scan)");
  crossover->add_option("--tol", cfg.tol, "bisection tolerance on beta");
  add_output_options(crossover, cfg);

  auto* classify = app.add_subcommand("classify", "S/T/K type of one graph");
  add_graph_options(classify, cfg);
  classify->add_option("--beta", cfg.beta, "lo:hi:steps (default: mixed grid)");
  classify->add_option("--grid", cfg.q_grid, "q grid cells (>= 64)");
  classify->add_option("--tol", cfg.tol, "golden-section tolerance");
  add_output_options(classify, cfg);

  auto* classify_all = app.add_subcommand("classify-all", "Type sweep of small connected graphs");
  classify_all->add_option("--max-v", cfg.max_v, "Largest vertex count (<= 5)");
  classify_all->add_option("--beta", cfg.beta, "lo:hi:steps (default: mixed grid)");
  classify_all->add_option("--grid", cfg.q_grid, "q grid cells (>= 64)");
  classify_all->add_option("--tol", cfg.tol, "golden-section tolerance");
  add_output_options(classify_all, cfg);

  auto* oracle = app.add_subcommand("oracle", "Exact counts in finite T(q) hosts");
  add_graph_options(oracle, cfg);
  oracle->add_option("--beta", cfg.beta, "Edge density");
  oracle->add_option("--q", cfg.q, "q (decimal or 1/sqrt2)");
  oracle->add_option("--n-list", cfg.n_list, "Comma-separated host sizes");
  oracle->add_option("--budget", cfg.budget, "Backtracking node budget");
  add_output_options(oracle, cfg);

  auto* search = app.add_subcommand("search", "Graphs with alpha* > max(alpha, v/2)");
  search->add_option("--max-v", cfg.max_v, "Largest vertex count (<= 7)");
  add_output_options(search, cfg);

  auto* lp = app.add_subcommand("lp", "Exact primal/dual exponent programs");
  add_graph_options(lp, cfg);
  lp->add_option("--epsilon", cfg.epsilon, "Rational epsilon in (0, 1]");
  add_output_options(lp, cfg);

  auto* ex = app.add_subcommand("ex", "Exact ex(n, e, G) by exhaustive host search");
  add_graph_options(ex, cfg);
  ex->add_option("--n", cfg.n, "Host vertices (<= 9)")->required();
  ex->add_option("--e", cfg.e, "Edge bound")->required();
  add_output_options(ex, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  std::string text;
  try {
    text = dispatch(cfg);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (" << e.nodes_visited() << " nodes visited)\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (cfg.out) {
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file || !(file << text) || !file.flush()) {
      err << "error: cannot write " << *cfg.out << "\n";
      return kExitInvalid;
    }
  } else {
    out << text;
  }
  return kExitOk;
}

}  // namespace extremal::cli
