#pragma once

// Asymptotic homomorphism densities into the three-class host family
// T(q): a yellow clique Y, a red clique R and a blue independent set B,
// with R complete to Y and to B. q = 0 is the quasi-star, q = 1 the
// quasi-clique.

#include "extremal/numeric.hpp"
#include "extremal/scalar_search.hpp"
#include "extremal/weightings.hpp"

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// Vertex-class fractions of T(q) at edge density beta.
struct ClassFractions {
  double beta = 0.0;
  double q = 0.0;
  double y = 0.0;
  double r = 0.0;
  double b = 0.0;
};

inline ClassFractions class_fractions(double beta, double q) {
  if (!(beta >= 0.0 && beta <= 1.0)) {
    throw InvalidArgument("edge density outside [0, 1]: " + format_real(beta));
  }
  if (!(q >= 0.0 && q <= 1.0)) {
    throw InvalidArgument("q outside [0, 1]: " + format_real(q));
  }
  // Both forms below are algebraically the textbook ones
  //   r = 1 - s,  b = s - sqrt(beta) q,  s = sqrt(1 - beta (1 - q^2)),
  // rewritten so that neither cancels catastrophically at small beta or
  // near beta = 1.
  double deficit = beta * (1.0 - q * q);
  double s = std::sqrt(1.0 - deficit);
  double y = std::sqrt(beta) * q;
  double r = deficit / (1.0 + s);
  double denom = s + y;
  double b = denom > 0.0 ? (1.0 - beta) / denom : 0.0;
  return {beta, q, y, r, b};
}

namespace detail {

/// log of mult * y^ny * r^nr * b^nb, or -inf when the term vanishes
/// (0^0 counts as 1).
inline double log_term(const ClassFractions& f, const ColourCounts& c, std::uint64_t mult) {
  double acc = std::log(static_cast<double>(mult));
  auto add = [&acc](double base, int exponent) {
    if (exponent == 0) {
      return true;
    }
    if (base <= 0.0) {
      return false;
    }
    acc += exponent * std::log(base);
    return true;
  };
  if (!add(f.y, c.y) || !add(f.r, c.r) || !add(f.b, c.b)) {
    return -std::numeric_limits<double>::infinity();
  }
  return acc;
}

}  // namespace detail

/// log t(G, T(q)) by log-sum-exp over the spectrum; -inf when t = 0.
inline double log_t_density(const WeightingSpectrum& spec, double beta, double q) {
  ClassFractions f = class_fractions(beta, q);
  std::vector<double> logs;
  logs.reserve(spec.entries().size());
  double top = -std::numeric_limits<double>::infinity();
  for (const auto& [c, mult] : spec.entries()) {
    double l = detail::log_term(f, c, mult);
    if (std::isfinite(l)) {
      logs.push_back(l);
      top = std::max(top, l);
    }
  }
  if (logs.empty()) {
    return -std::numeric_limits<double>::infinity();
  }
  double sum = 0.0;
  for (double l : logs) {
    sum += std::exp(l - top);
  }
  return top + std::log(sum);
}

/// t(G, T(q)) = sum over weightings of y^y_phi r^r_phi b^b_phi.
inline double t_density(const WeightingSpectrum& spec, double beta, double q) {
  ClassFractions f = class_fractions(beta, q);
  double sum = 0.0;
  for (const auto& [c, mult] : spec.entries()) {
    double l = detail::log_term(f, c, mult);
    if (std::isfinite(l)) {
      sum += std::exp(l);
    }
  }
  return sum;
}

/// Quasi-clique density; equals beta^(v/2) for graphs without isolated vertices.
inline double k_density(const WeightingSpectrum& spec, double beta) {
  return t_density(spec, beta, 1.0);
}

/// Quasi-star density.
inline double s_density(const WeightingSpectrum& spec, double beta) {
  return t_density(spec, beta, 0.0);
}

// ---------------------------------------------------------------------------
// Optimising over q

inline constexpr double kTieRelTol = 1e-12;

struct ProfilePoint {
  double beta = 0.0;
  double f_T = 0.0;
  double q_star = 0.0;
  double t_S = 0.0;
  double t_K = 0.0;
  /// Another q, separated from q_star by more than two grid cells, attains
  /// f_T within the tie tolerance.
  bool tie = false;
};

/// sup over q of t(G, T(q)): grid scan over q = i / q_grid, then
/// golden-section refinement around every local grid maximum. q_star is
/// the smallest q whose value is within kTieRelTol of the supremum.
inline ProfilePoint f_T_profile(const WeightingSpectrum& spec, double beta, int q_grid = 256,
                                double refine_tol = 1e-10) {
  if (q_grid < 64) {
    throw InvalidArgument("q grid must have at least 64 cells");
  }
  if (!(refine_tol > 0.0)) {
    throw InvalidArgument("refinement tolerance must be positive");
  }
  auto t = [&](double q) { return t_density(spec, beta, q); };

  struct Candidate {
    double q;
    double value;
  };
  std::vector<Candidate> candidates;
  candidates.reserve(static_cast<std::size_t>(q_grid) + 16);
  for (int i = 0; i <= q_grid; ++i) {
    double q = static_cast<double>(i) / q_grid;
    candidates.push_back({q, t(q)});
  }
  std::vector<Candidate> refined;
  for (int i = 0; i <= q_grid; ++i) {
    double here = candidates[i].value;
    bool left_ok = i == 0 || candidates[i - 1].value <= here;
    bool right_ok = i == q_grid || candidates[i + 1].value <= here;
    if (left_ok && right_ok) {
      double lo = candidates[std::max(i - 1, 0)].q;
      double hi = candidates[std::min(i + 1, q_grid)].q;
      auto opt = golden_section_maximize(t, lo, hi, refine_tol);
      refined.push_back({opt.x, opt.value});
    }
  }
  candidates.insert(candidates.end(), refined.begin(), refined.end());

  double best = 0.0;
  for (const auto& c : candidates) {
    best = std::max(best, c.value);
  }
  ProfilePoint p;
  p.beta = beta;
  p.f_T = best;
  p.t_S = candidates.front().value;
  p.t_K = candidates[q_grid].value;
  p.q_star = 1.0;
  for (const auto& c : candidates) {
    if (c.value >= best * (1.0 - kTieRelTol)) {
      p.q_star = std::min(p.q_star, c.q);
    }
  }
  double separation = 2.0 / q_grid;
  for (const auto& c : candidates) {
    if (c.value >= best * (1.0 - kTieRelTol) && c.q - p.q_star > separation) {
      p.tie = true;
    }
  }
  return p;
}

enum class Winner { S, T, K };

inline char winner_symbol(Winner w) {
  switch (w) {
    case Winner::S:
      return 'S';
    case Winner::T:
      return 'T';
    case Winner::K:
      return 'K';
  }
  return '?';
}

/// Which host maximises: an endpoint wins when its value is within
/// kTieRelTol of f_T (quasi-clique first, then quasi-star); otherwise the
/// supremum is attained only in the interior.
inline Winner attribute_winner(const ProfilePoint& p) {
  double floor = p.f_T * (1.0 - kTieRelTol);
  if (p.t_K >= floor) {
    return Winner::K;
  }
  if (p.t_S >= floor) {
    return Winner::S;
  }
  return Winner::T;
}

struct DensitySample {
  ProfilePoint point;
  Winner winner = Winner::K;
};

struct DensityCurve {
  std::string graph_id;
  int q_grid = 0;
  double refine_tol = 0.0;
  std::vector<DensitySample> samples;
};

inline DensityCurve density_curve(const WeightingSpectrum& spec, const std::vector<double>& betas,
                                  std::string graph_id, int q_grid = 256,
                                  double refine_tol = 1e-10) {
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (!(betas[i] > betas[i - 1])) {
      throw InvalidArgument("beta grid must be strictly increasing");
    }
  }
  DensityCurve curve{std::move(graph_id), q_grid, refine_tol, {}};
  for (double beta : betas) {
    ProfilePoint p = f_T_profile(spec, beta, q_grid, refine_tol);
    curve.samples.push_back({p, attribute_winner(p)});
  }
  return curve;
}

/// Linearly spaced grid lo, ..., hi with `steps` points.
inline std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 2 || !(hi > lo)) {
    throw InvalidArgument("linear grid needs steps >= 2 and hi > lo");
  }
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(i == steps - 1 ? hi : lo + (hi - lo) * i / (steps - 1));
  }
  return out;
}

inline std::vector<double> geometric_grid(double lo, double hi, int steps) {
  if (steps < 2 || !(lo > 0.0) || !(hi > lo)) {
    throw InvalidArgument("geometric grid needs steps >= 2 and 0 < lo < hi");
  }
  std::vector<double> out;
  double ratio = std::log(hi / lo);
  for (int i = 0; i < steps; ++i) {
    out.push_back(i == 0 ? lo : i == steps - 1 ? hi : lo * std::exp(ratio * i / (steps - 1)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossovers and small-beta asymptotics

/// Root in beta of t(., q1) - t(., q2) on [lo, hi], by bisection.
inline double crossover_beta(const WeightingSpectrum& spec, double q1, double q2, double lo,
                             double hi, double tol = 1e-12) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
    throw InvalidArgument("crossover bracket must satisfy 0 <= lo < hi <= 1");
  }
  return bisect_root(
      [&](double beta) { return t_density(spec, beta, q1) - t_density(spec, beta, q2); }, lo, hi,
      tol);
}

/// Least-squares slope of log t against log beta over a geometric grid.
inline double asymptotic_exponent(const WeightingSpectrum& spec, double q, double beta_lo,
                                  double beta_hi, int points = 24) {
  if (!(beta_lo > 0.0 && beta_lo < beta_hi && beta_hi < 1.0)) {
    throw InvalidArgument("exponent fit needs 0 < beta_lo < beta_hi < 1");
  }
  if (points < 20) {
    throw InvalidArgument("exponent fit needs at least 20 points");
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double beta : geometric_grid(beta_lo, beta_hi, points)) {
    double lt = log_t_density(spec, beta, q);
    if (!std::isfinite(lt)) {
      throw InvalidArgument("density vanishes at beta = " + format_real(beta));
    }
    double lb = std::log(beta);
    sx += lb;
    sy += lt;
    sxx += lb * lb;
    sxy += lb * lt;
  }
  double n = points;
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace extremal
