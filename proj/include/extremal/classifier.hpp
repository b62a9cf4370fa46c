#pragma once

// Numeric S / T / K type classification over an edge-density grid, small
// graph sweeps, counterexample search and exact ex(n, e, G) at tiny n.

#include "extremal/density.hpp"
#include "extremal/graph.hpp"
#include "extremal/oracle.hpp"
#include "extremal/weightings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extremal {

enum class TypePattern { K, SK, TK, STK, Other };

inline std::string to_string(TypePattern p) {
  switch (p) {
    case TypePattern::K:
      return "K";
    case TypePattern::SK:
      return "SK";
    case TypePattern::TK:
      return "TK";
    case TypePattern::STK:
      return "STK";
    case TypePattern::Other:
      return "OTHER";
  }
  return "OTHER";
}

/// Geometric 1e-5 .. 0.1 (40 points) followed by 0.11 .. 1.0 in steps of
/// 0.01 (90 points).
inline std::vector<double> default_beta_grid() {
  std::vector<double> grid = geometric_grid(1e-5, 0.1, 40);
  for (int i = 11; i <= 100; ++i) {
    grid.push_back(i / 100.0);
  }
  return grid;
}

struct ClassifierOptions {
  std::vector<double> betas = default_beta_grid();
  int q_grid = 256;
  double refine_tol = 1e-10;
  double boundary_tol = 1e-10;
};

struct TypeBoundary {
  Winner from = Winner::S;
  Winner to = Winner::K;
  double lo = 0.0;  // last beta still classified `from`
  double hi = 0.0;  // first beta classified `to`
  double estimate() const { return (lo + hi) / 2.0; }
};

struct TypeClassification {
  std::string graph_id;
  TypePattern pattern = TypePattern::Other;
  std::string winner_runs;  // compressed winner sequence, e.g. "SK"
  std::vector<TypeBoundary> boundaries;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::vector<double> betas;
  std::vector<Winner> winners;
  std::vector<double> q_stars;
  int q_grid = 0;
};

inline Winner winner_at(const WeightingSpectrum& spec, double beta, const ClassifierOptions& opt) {
  return attribute_winner(f_T_profile(spec, beta, opt.q_grid, opt.refine_tol));
}

inline TypeClassification classify_type(const Graph& g, const ClassifierOptions& opt = {},
                                        std::string graph_id = {}) {
  if (!g.is_connected() || g.vertex_count() < 2) {
    throw InvalidArgument("classification needs a connected graph with at least one edge");
  }
  if (opt.betas.empty()) {
    throw InvalidArgument("empty beta grid");
  }
  WeightingSpectrum spec(g);
  TypeClassification out;
  out.graph_id = graph_id.empty() ? write_graph6(g) : std::move(graph_id);
  out.betas = opt.betas;
  out.q_grid = opt.q_grid;
  DensityCurve curve = density_curve(spec, opt.betas, out.graph_id, opt.q_grid, opt.refine_tol);
  for (const auto& s : curve.samples) {
    out.winners.push_back(s.winner);
    out.q_stars.push_back(s.point.q_star);
  }

  for (std::size_t i = 0; i < out.winners.size(); ++i) {
    if (i == 0 || out.winners[i] != out.winners[i - 1]) {
      out.winner_runs += winner_symbol(out.winners[i]);
    }
    if (i > 0 && out.winners[i] != out.winners[i - 1]) {
      TypeBoundary b{out.winners[i - 1], out.winners[i], out.betas[i - 1], out.betas[i]};
      while (b.hi - b.lo > opt.boundary_tol) {
        double mid = b.lo + (b.hi - b.lo) / 2.0;
        if (mid <= b.lo || mid >= b.hi) {
          break;
        }
        (winner_at(spec, mid, opt) == b.from ? b.lo : b.hi) = mid;
      }
      out.boundaries.push_back(b);
    }
  }

  const std::string& runs = out.winner_runs;
  if (runs == "K") {
    out.pattern = TypePattern::K;
  } else if (runs == "SK") {
    out.pattern = TypePattern::SK;
  } else if (runs == "TK") {
    out.pattern = TypePattern::TK;
  } else if (runs == "STK") {
    out.pattern = TypePattern::STK;
  }
  if (out.pattern != TypePattern::Other && !out.boundaries.empty()) {
    out.gamma = out.boundaries[0].estimate();
    if (out.boundaries.size() > 1) {
      out.delta = out.boundaries[1].estimate();
    }
  }
  return out;
}

struct QStarCurve {
  std::vector<double> betas;
  std::vector<double> q_stars;
  std::vector<bool> ties;
  bool non_decreasing = true;
  /// Indices i where q_star[i] < q_star[i - 1].
  std::vector<std::size_t> violations;
};

/// Samples the smallest maximising q along the beta grid and reports
/// whether it is non-decreasing. A probe only: violations are data.
inline QStarCurve q_star_curve(const Graph& g, const std::vector<double>& betas, int q_grid = 256,
                               double refine_tol = 1e-10) {
  WeightingSpectrum spec(g);
  QStarCurve out;
  for (double beta : betas) {
    ProfilePoint p = f_T_profile(spec, beta, q_grid, refine_tol);
    out.betas.push_back(beta);
    out.q_stars.push_back(p.q_star);
    out.ties.push_back(p.tie);
  }
  for (std::size_t i = 1; i < out.q_stars.size(); ++i) {
    if (out.q_stars[i] < out.q_stars[i - 1]) {
      out.non_decreasing = false;
      out.violations.push_back(i);
    }
  }
  return out;
}

/// True when alpha*(G) > max(alpha(G), v/2).
inline bool is_counterexample(const WeightingSpectrum& spec) {
  int twice_star = spec.doubled_alpha_star();
  return twice_star > 2 * spec.alpha() && twice_star > spec.vertex_count();
}

inline bool is_counterexample(const Graph& g) {
  return !g.has_isolated_vertices() && is_counterexample(WeightingSpectrum(g));
}

/// Every connected isomorphism class on at most max_v vertices with
/// alpha* > max(alpha, v/2).
inline std::vector<Graph> search_counterexamples(int max_v) {
  std::vector<Graph> out;
  for (Graph& g : enumerate_connected_graphs(max_v)) {
    if (is_counterexample(g)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

/// Start of the type forced by the small-beta exponents v/2, v - alpha and
/// v - alpha*: 'K' when alpha* = v/2, 'T' when alpha* > max(alpha, v/2),
/// otherwise 'S' (alpha = alpha* > v/2).
inline char predicted_start(const WeightingSpectrum& spec) {
  int twice_star = spec.doubled_alpha_star();
  if (twice_star == spec.vertex_count()) {
    return 'K';
  }
  return twice_star > 2 * spec.alpha() ? 'T' : 'S';
}

struct SweepRow {
  Graph graph;
  std::string graph6;
  int v = 0;
  int e = 0;
  int alpha = 0;
  Rational alpha_star;
  std::uint64_t max_independent_sets = 0;
  char predicted = '?';
  TypeClassification classification;
  /// alpha* = v/2 gives type K; otherwise the type starts with the
  /// predicted letter.
  bool consistent = false;
};

inline std::vector<SweepRow> sweep_connected_graphs(int max_v, const ClassifierOptions& opt = {}) {
  if (max_v > 5) {
    throw InvalidArgument("the numeric sweep covers at most 5 vertices");
  }
  std::vector<SweepRow> rows;
  for (Graph& g : enumerate_connected_graphs(max_v)) {
    WeightingSpectrum spec(g);
    SweepRow row;
    row.graph6 = write_graph6(g);
    row.v = g.vertex_count();
    row.e = static_cast<int>(g.edge_count());
    row.alpha = spec.alpha();
    row.alpha_star = spec.alpha_star();
    row.max_independent_sets = spec.maximum_independent_sets();
    row.predicted = predicted_start(spec);
    row.classification = classify_type(g, opt, row.graph6);
    const std::string& runs = row.classification.winner_runs;
    row.consistent = !runs.empty() && runs.front() == row.predicted && runs.back() == 'K' &&
                     (row.predicted != 'K' || row.classification.pattern == TypePattern::K);
    row.graph = std::move(g);
    rows.push_back(std::move(row));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Exact ex(n, e, G)

struct ExResult {
  BigInt maximum = 0;
  Graph maximiser;
  std::size_t hosts_examined = 0;
};

inline constexpr int kMaxExhaustiveHostVertices = 9;

/// max N(G, H) over hosts on n vertices with at most e edges. Adding an
/// edge never destroys a copy, so only hosts with exactly min(e, C(n,2))
/// edges are scanned, one per isomorphism class.
inline ExResult exhaustive_ex(int n, int e, const Graph& pattern) {
  if (n < 1 || n > kMaxExhaustiveHostVertices) {
    throw InvalidArgument("exhaustive ex limited to n <= " +
                          std::to_string(kMaxExhaustiveHostVertices));
  }
  if (e < 0) {
    throw InvalidArgument("edge bound must be non-negative");
  }
  int edges = std::min(e, n * (n - 1) / 2);
  ExResult out;
  bool have = false;
  for (const Graph& host : graphs_with_edge_count(n, edges)) {
    ++out.hosts_examined;
    BigInt c = pattern.vertex_count() > n ? BigInt(0) : copies_count(pattern, host);
    if (!have || c > out.maximum) {
      out.maximum = c;
      out.maximiser = host;
      have = true;
    }
  }
  return out;
}

struct FamilyHost {
  int yellow = 0;
  int red = 0;
  int blue = 0;
  std::uint64_t edges = 0;
  BigInt copies = 0;
};

/// Best three-class host (yellow clique, red clique, blue independent set,
/// red complete to both) on exactly n vertices with at most e edges,
/// counted exactly through the weighting spectrum.
inline FamilyHost best_family_host(int n, int e, const Graph& pattern) {
  WeightingSpectrum spec(pattern);
  std::uint64_t aut = automorphism_count(pattern);
  FamilyHost best;
  bool have = false;
  for (int y = 0; y <= n; ++y) {
    for (int r = 0; y + r <= n; ++r) {
      int b = n - y - r;
      std::uint64_t m = static_cast<std::uint64_t>(y + r) * (y + r - 1) / 2 +
                        static_cast<std::uint64_t>(r) * b;
      if (m > static_cast<std::uint64_t>(e)) {
        continue;
      }
      BigInt labelled = 0;
      for (const auto& [c, mult] : spec.entries()) {
        labelled += BigInt(mult) * falling_factorial(y, c.y) * falling_factorial(r, c.r) *
                    falling_factorial(b, c.b);
      }
      BigInt copies = labelled / aut;
      if (!have || copies > best.copies) {
        best = {y, r, b, m, copies};
        have = true;
      }
    }
  }
  return best;
}

}  // namespace extremal
