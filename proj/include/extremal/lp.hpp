#pragma once

// Exact rational linear programming for the blow-up exponent programs:
//
//   primal:  max sum_u x_u   s.t. 0 <= x_u <= 1,  x_u + x_w <= 2 - eps on edges
//   dual:    min sum_u z_u + (2 - eps) sum_uw y_uw
//            s.t. z_u + sum_{w ~ u} y_uw >= 1,  y, z >= 0
//
// Both are solved by a dense two-phase tableau simplex over cpp_rational
// with Bland's rule, so every optimum is an exact rational.

#include "extremal/graph.hpp"
#include "extremal/numeric.hpp"
#include "extremal/weightings.hpp"

#include <string>
#include <vector>

namespace extremal {

enum class Sense { LessEqual, GreaterEqual, Equal };

struct LinearConstraint {
  std::vector<Rational> coefficients;
  Sense sense = Sense::LessEqual;
  Rational rhs = 0;
};

/// Optimise objective . x over x >= 0 subject to the constraints.
struct LinearProgram {
  int variable_count = 0;
  std::vector<Rational> objective;
  std::vector<LinearConstraint> constraints;
  bool maximize = true;
};

struct LpSolution {
  Rational optimum = 0;
  std::vector<Rational> x;
  int pivots = 0;
};

/// Signals an infeasible or unbounded program. Neither can happen for the
/// primal/dual pair above, so seeing one there indicates a solver bug.
class LpError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace detail {

class Tableau {
public:
  // rows_[i] = coefficients over all columns, then rhs in the last slot.
  std::vector<std::vector<Rational>> rows;
  std::vector<int> basis;
  int columns = 0;
  int pivots = 0;

  Rational& rhs(std::size_t i) { return rows[i][columns]; }

  void pivot(std::size_t row, int col) {
    ++pivots;
    Rational p = rows[row][col];
    for (auto& a : rows[row]) {
      a /= p;
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == row || rows[i][col] == 0) {
        continue;
      }
      Rational factor = rows[i][col];
      for (int j = 0; j <= columns; ++j) {
        if (rows[row][j] != 0) {
          rows[i][j] -= factor * rows[row][j];
        }
      }
    }
    basis[row] = col;
  }

  /// Maximises cost . x over the current basis with Bland's rule; columns
  /// flagged in `blocked` never enter.
  void maximize(const std::vector<Rational>& cost, const std::vector<bool>& blocked) {
    while (true) {
      int entering = -1;
      for (int j = 0; j < columns && entering < 0; ++j) {
        if (blocked[j] || is_basic(j)) {
          continue;
        }
        Rational reduced = cost[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][j] != 0) {
            reduced -= cost[basis[i]] * rows[i][j];
          }
        }
        if (reduced > 0) {
          entering = j;
        }
      }
      if (entering < 0) {
        return;
      }
      int leaving = -1;
      Rational best_ratio;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i][entering] <= 0) {
          continue;
        }
        Rational ratio = rows[i][columns] / rows[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis[i] < basis[leaving])) {
          leaving = static_cast<int>(i);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        throw LpError("linear program is unbounded");
      }
      pivot(static_cast<std::size_t>(leaving), entering);
    }
  }

  bool is_basic(int col) const {
    for (int b : basis) {
      if (b == col) {
        return true;
      }
    }
    return false;
  }
};

}  // namespace detail

inline LpSolution solve(const LinearProgram& lp) {
  const int n = lp.variable_count;
  const std::size_t m = lp.constraints.size();
  if (static_cast<int>(lp.objective.size()) != n) {
    throw InvalidArgument("objective length does not match variable count");
  }

  // Normalise to non-negative right-hand sides.
  std::vector<LinearConstraint> rows = lp.constraints;
  for (auto& row : rows) {
    if (static_cast<int>(row.coefficients.size()) != n) {
      throw InvalidArgument("constraint length does not match variable count");
    }
    if (row.rhs < 0) {
      for (auto& a : row.coefficients) {
        a = -a;
      }
      row.rhs = -row.rhs;
      if (row.sense == Sense::LessEqual) {
        row.sense = Sense::GreaterEqual;
      } else if (row.sense == Sense::GreaterEqual) {
        row.sense = Sense::LessEqual;
      }
    }
  }

  // Column layout: structural | slack/surplus | artificial.
  int slack_count = 0;
  int artificial_count = 0;
  for (const auto& row : rows) {
    slack_count += row.sense != Sense::Equal;
    artificial_count += row.sense != Sense::LessEqual;
  }
  detail::Tableau t;
  t.columns = n + slack_count + artificial_count;
  t.rows.assign(m, std::vector<Rational>(static_cast<std::size_t>(t.columns) + 1, Rational(0)));
  t.basis.assign(m, -1);
  std::vector<bool> artificial(static_cast<std::size_t>(t.columns), false);
  int next_slack = n;
  int next_artificial = n + slack_count;
  for (std::size_t i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      t.rows[i][j] = rows[i].coefficients[j];
    }
    t.rhs(i) = rows[i].rhs;
    switch (rows[i].sense) {
      case Sense::LessEqual:
        t.rows[i][next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case Sense::GreaterEqual:
        t.rows[i][next_slack++] = -1;
        t.rows[i][next_artificial] = 1;
        artificial[next_artificial] = true;
        t.basis[i] = next_artificial++;
        break;
      case Sense::Equal:
        t.rows[i][next_artificial] = 1;
        artificial[next_artificial] = true;
        t.basis[i] = next_artificial++;
        break;
    }
  }

  std::vector<bool> none_blocked(static_cast<std::size_t>(t.columns), false);
  if (artificial_count > 0) {
    std::vector<Rational> phase_one(static_cast<std::size_t>(t.columns), Rational(0));
    for (int j = 0; j < t.columns; ++j) {
      if (artificial[j]) {
        phase_one[j] = -1;
      }
    }
    t.maximize(phase_one, none_blocked);
    for (std::size_t i = 0; i < m; ++i) {
      if (artificial[t.basis[i]] && t.rhs(i) != 0) {
        throw LpError("linear program is infeasible");
      }
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    for (std::size_t i = 0; i < t.rows.size();) {
      if (!artificial[t.basis[i]]) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < t.columns && col < 0; ++j) {
        if (!artificial[j] && t.rows[i][j] != 0) {
          col = j;
        }
      }
      if (col >= 0) {
        t.pivot(i, col);
        ++i;
      } else {
        t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
        t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }

  std::vector<Rational> cost(static_cast<std::size_t>(t.columns), Rational(0));
  for (int j = 0; j < n; ++j) {
    cost[j] = lp.maximize ? lp.objective[j] : -lp.objective[j];
  }
  t.maximize(cost, artificial);

  LpSolution sol;
  sol.x.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (t.basis[i] < n) {
      sol.x[t.basis[i]] = t.rhs(i);
    }
  }
  for (int j = 0; j < n; ++j) {
    sol.optimum += lp.objective[j] * sol.x[j];
  }
  sol.pivots = t.pivots;
  return sol;
}

/// True when x >= 0 satisfies every constraint exactly.
inline bool is_feasible(const LinearProgram& lp, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != lp.variable_count) {
    return false;
  }
  for (const auto& v : x) {
    if (v < 0) {
      return false;
    }
  }
  for (const auto& row : lp.constraints) {
    Rational lhs = 0;
    for (int j = 0; j < lp.variable_count; ++j) {
      lhs += row.coefficients[j] * x[j];
    }
    bool ok = row.sense == Sense::LessEqual      ? lhs <= row.rhs
              : row.sense == Sense::GreaterEqual ? lhs >= row.rhs
                                                 : lhs == row.rhs;
    if (!ok) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// The blow-up exponent programs

inline void check_epsilon(const Rational& epsilon) {
  if (!(epsilon > 0 && epsilon < 2)) {
    throw InvalidArgument("epsilon must lie in (0, 2), got " + to_string(epsilon));
  }
}

/// Variables x_u, one per vertex. Box rows first (vertex order), then one
/// row per edge (edge order).
inline LinearProgram primal_lp(const Graph& g, const Rational& epsilon) {
  check_epsilon(epsilon);
  int v = g.vertex_count();
  LinearProgram lp;
  lp.variable_count = v;
  lp.objective.assign(static_cast<std::size_t>(v), Rational(1));
  lp.maximize = true;
  for (int u = 0; u < v; ++u) {
    LinearConstraint row{std::vector<Rational>(static_cast<std::size_t>(v), Rational(0)),
                         Sense::LessEqual, Rational(1)};
    row.coefficients[u] = 1;
    lp.constraints.push_back(std::move(row));
  }
  for (Edge e : g.edges()) {
    LinearConstraint row{std::vector<Rational>(static_cast<std::size_t>(v), Rational(0)),
                         Sense::LessEqual, 2 - epsilon};
    row.coefficients[e.u] = 1;
    row.coefficients[e.w] = 1;
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

/// Variables y_e (edge order) followed by z_u (vertex order); one covering
/// row per vertex.
inline LinearProgram dual_lp(const Graph& g, const Rational& epsilon) {
  check_epsilon(epsilon);
  int v = g.vertex_count();
  int m = static_cast<int>(g.edge_count());
  LinearProgram lp;
  lp.variable_count = m + v;
  lp.objective.assign(static_cast<std::size_t>(m + v), Rational(1));
  for (int k = 0; k < m; ++k) {
    lp.objective[k] = 2 - epsilon;
  }
  lp.maximize = false;
  for (int u = 0; u < v; ++u) {
    LinearConstraint row{std::vector<Rational>(static_cast<std::size_t>(m + v), Rational(0)),
                         Sense::GreaterEqual, Rational(1)};
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edges()[k];
      if (e.u == u || e.w == u) {
        row.coefficients[k] = 1;
      }
    }
    row.coefficients[m + u] = 1;
    lp.constraints.push_back(std::move(row));
  }
  return lp;
}

struct PrimalFormula {
  Rational optimum;
  std::vector<Rational> witness;  // x_u = 1 - eps (1 - phi(u))
  Weighting weighting;            // the maximal phi used
};

/// v - eps (v - alpha*), with the witness built from a maximal half-integral
/// weighting. Valid for 0 < eps <= 1: beyond that the witness leaves the box.
inline PrimalFormula primal_optimum_formula(const Graph& g, const Rational& epsilon) {
  if (!(epsilon > 0 && epsilon <= 1)) {
    throw InvalidArgument("closed-form primal optimum needs epsilon in (0, 1], got " +
                          to_string(epsilon));
  }
  Weighting best;
  bool found = false;
  for (auto& w : enumerate_weightings(g)) {
    if (!found || w.counts.doubled_total() > best.counts.doubled_total()) {
      best = std::move(w);
      found = true;
    }
  }
  int v = g.vertex_count();
  PrimalFormula out;
  out.optimum = v - epsilon * (v - best.total());
  for (int u = 0; u < v; ++u) {
    out.witness.push_back(1 - epsilon * (1 - Rational(best.halves[u], 2)));
  }
  out.weighting = std::move(best);
  return out;
}

struct DualityReport {
  Rational epsilon;
  Rational primal;
  Rational dual;
  Rational formula;
  std::vector<Rational> witness_x;
  std::vector<Rational> witness_y;  // per edge
  std::vector<Rational> witness_z;  // per vertex
  bool formula_witness_optimal = false;
  bool complementary_slackness = false;

  bool consistent() const {
    return primal == dual && dual == formula && formula_witness_optimal &&
           complementary_slackness;
  }
};

/// Thrown when the primal, dual and closed form disagree.
class DualityMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Solves both programs, re-verifies feasibility by substitution, checks
/// complementary slackness between the two solutions, and compares against
/// the closed form. Throws DualityMismatch on any disagreement.
inline DualityReport duality_check(const Graph& g, const Rational& epsilon) {
  LinearProgram primal = primal_lp(g, epsilon);
  LinearProgram dual = dual_lp(g, epsilon);
  LpSolution ps = solve(primal);
  LpSolution ds = solve(dual);
  if (!is_feasible(primal, ps.x) || !is_feasible(dual, ds.x)) {
    throw DualityMismatch("simplex returned an infeasible point");
  }
  PrimalFormula formula = primal_optimum_formula(g, epsilon);

  DualityReport report;
  report.epsilon = epsilon;
  report.primal = ps.optimum;
  report.dual = ds.optimum;
  report.formula = formula.optimum;
  report.witness_x = ps.x;
  int m = static_cast<int>(g.edge_count());
  int v = g.vertex_count();
  report.witness_y.assign(ds.x.begin(), ds.x.begin() + m);
  report.witness_z.assign(ds.x.begin() + m, ds.x.end());

  Rational witness_total = 0;
  for (const auto& x : formula.witness) {
    witness_total += x;
  }
  report.formula_witness_optimal =
      is_feasible(primal, formula.witness) && witness_total == formula.optimum;

  // Dual variables of the primal rows are (z_u) for the box rows and (y_e)
  // for the edge rows; primal x_u pairs with the dual covering row of u.
  bool slack_ok = true;
  for (int u = 0; u < v; ++u) {
    if (report.witness_z[u] > 0 && ps.x[u] != 1) {
      slack_ok = false;
    }
    Rational cover = report.witness_z[u];
    for (int k = 0; k < m; ++k) {
      const Edge& e = g.edges()[k];
      if (e.u == u || e.w == u) {
        cover += report.witness_y[k];
      }
    }
    if (ps.x[u] > 0 && cover != 1) {
      slack_ok = false;
    }
  }
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edges()[k];
    if (report.witness_y[k] > 0 && ps.x[e.u] + ps.x[e.w] != 2 - epsilon) {
      slack_ok = false;
    }
  }
  report.complementary_slackness = slack_ok;

  if (!report.consistent()) {
    throw DualityMismatch("duality check failed for " + g.edge_list() + " at epsilon " +
                          to_string(epsilon) + ": primal " + to_string(report.primal) +
                          ", dual " + to_string(report.dual) + ", formula " +
                          to_string(report.formula));
  }
  return report;
}

/// eps with beta / 2 = n^(-eps).
inline double epsilon_of(double beta, long n) {
  if (!(beta > 0.0 && beta <= 2.0)) {
    throw InvalidArgument("epsilon_of needs 0 < beta <= 2");
  }
  if (n < 2) {
    throw InvalidArgument("epsilon_of needs n >= 2");
  }
  return -std::log(beta / 2.0) / std::log(static_cast<double>(n));
}

}  // namespace extremal
