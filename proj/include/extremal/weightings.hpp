#pragma once

// Half-integral fractional independence weightings and their (r, y, b)
// census. Weights are stored in halves: 0 -> 0, 1 -> 1/2, 2 -> 1.

#include "extremal/graph.hpp"
#include "extremal/numeric.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace extremal {

/// Vertex counts of a weighting by weight class: r at 0, y at 1/2, b at 1.
struct ColourCounts {
  int r = 0;
  int y = 0;
  int b = 0;

  /// Twice the total weight, y + 2b.
  int doubled_total() const noexcept { return y + 2 * b; }
  Rational total() const { return Rational(doubled_total(), 2); }

  friend bool operator==(const ColourCounts&, const ColourCounts&) = default;
  friend auto operator<=>(const ColourCounts&, const ColourCounts&) = default;
};

struct Weighting {
  std::vector<std::uint8_t> halves;  // per vertex, in {0, 1, 2}
  ColourCounts counts;

  Rational total() const { return counts.total(); }
};

namespace detail {

/// Depth-first assignment in vertex order; a weight is admissible when it
/// sums to at most 1 with every already-assigned neighbour.
template <typename Visit>
void for_each_weighting(const Graph& g, Visit&& visit) {
  int v = g.vertex_count();
  std::vector<std::uint8_t> halves(v, 0);
  auto assign = [&](auto&& self, int u) -> void {
    if (u == v) {
      visit(halves);
      return;
    }
    int cap = 2;
    VertexMask earlier = g.neighbours(u) & (Graph::bit(u) - 1);
    for (VertexMask n = earlier; n; n &= n - 1) {
      cap = std::min(cap, 2 - halves[std::countr_zero(n)]);
    }
    for (int w = 0; w <= cap; ++w) {
      halves[u] = static_cast<std::uint8_t>(w);
      self(self, u + 1);
    }
  };
  assign(assign, 0);
}

inline ColourCounts count_colours(const std::vector<std::uint8_t>& halves) {
  ColourCounts c;
  for (auto h : halves) {
    (h == 0 ? c.r : h == 1 ? c.y : c.b)++;
  }
  return c;
}

}  // namespace detail

inline std::vector<Weighting> enumerate_weightings(const Graph& g) {
  std::vector<Weighting> out;
  detail::for_each_weighting(g, [&](const std::vector<std::uint8_t>& halves) {
    out.push_back({halves, detail::count_colours(halves)});
  });
  return out;
}

/// alpha*(G), exact: a maximal weighting can always be taken half-integral.
inline Rational fractional_independence_number(const Graph& g) {
  int best = 0;
  detail::for_each_weighting(g, [&](const std::vector<std::uint8_t>& halves) {
    int total = 0;
    for (auto h : halves) {
      total += h;
    }
    best = std::max(best, total);
  });
  return Rational(best, 2);
}

class WeightingSpectrum {
public:
  using Entries = std::map<ColourCounts, std::uint64_t>;

  WeightingSpectrum() = default;

  /// Builds the census of `g`. Graphs with isolated vertices are rejected:
  /// the density formulas built on top assume every vertex has an edge.
  explicit WeightingSpectrum(const Graph& g) : v_(g.vertex_count()) {
    if (g.has_isolated_vertices()) {
      throw InvalidArgument("weighting spectrum requires a graph without isolated vertices");
    }
    detail::for_each_weighting(g, [&](const std::vector<std::uint8_t>& halves) {
      ++entries_[detail::count_colours(halves)];
    });
    finish();
  }

  /// Rebuilds a spectrum from explicit (r, y, b) multiplicities.
  WeightingSpectrum(int v, Entries entries) : v_(v), entries_(std::move(entries)) {
    for (const auto& [c, mult] : entries_) {
      if (c.r + c.y + c.b != v || mult == 0) {
        throw InvalidArgument("spectrum entry inconsistent with vertex count");
      }
    }
    finish();
  }

  int vertex_count() const noexcept { return v_; }
  const Entries& entries() const noexcept { return entries_; }
  int alpha() const noexcept { return alpha_; }
  const Rational& alpha_star() const noexcept { return alpha_star_; }
  /// alpha* doubled, always an integer.
  int doubled_alpha_star() const noexcept { return doubled_alpha_star_; }

  /// ctilde[i] = number of maximal weightings with exactly i zero-weight
  /// vertices, for i = 0 .. floor(v - alpha*).
  const std::vector<std::uint64_t>& ctilde() const noexcept { return ctilde_; }

  std::uint64_t weighting_count() const {
    std::uint64_t total = 0;
    for (const auto& [c, mult] : entries_) {
      total += mult;
    }
    return total;
  }

  /// The 0/1 weightings only.
  Entries zero_one_slice() const {
    Entries out;
    for (const auto& [c, mult] : entries_) {
      if (c.y == 0) {
        out.emplace(c, mult);
      }
    }
    return out;
  }

  /// Number of maximum independent sets, read off the y = 0 slice.
  std::uint64_t maximum_independent_sets() const {
    auto it = entries_.find(ColourCounts{v_ - alpha_, 0, alpha_});
    return it == entries_.end() ? 0 : it->second;
  }

private:
  void finish() {
    alpha_ = 0;
    doubled_alpha_star_ = 0;
    for (const auto& [c, mult] : entries_) {
      doubled_alpha_star_ = std::max(doubled_alpha_star_, c.doubled_total());
      if (c.y == 0) {
        alpha_ = std::max(alpha_, c.b);
      }
    }
    alpha_star_ = Rational(doubled_alpha_star_, 2);
    // v - alpha* = (2v - 2 alpha*) / 2, floored.
    int max_r = (2 * v_ - doubled_alpha_star_) / 2;
    ctilde_.assign(static_cast<std::size_t>(max_r) + 1, 0);
    for (const auto& [c, mult] : entries_) {
      if (c.doubled_total() == doubled_alpha_star_) {
        ctilde_.at(c.r) += mult;
      }
    }
  }

  int v_ = 0;
  Entries entries_;
  int alpha_ = 0;
  int doubled_alpha_star_ = 0;
  Rational alpha_star_ = 0;
  std::vector<std::uint64_t> ctilde_;
};

inline WeightingSpectrum spectrum(const Graph& g) {
  return WeightingSpectrum(g);
}

/// C2 = 2^(alpha - v) A(G), the leading constant of the quasi-star density.
inline Rational c2_constant(const WeightingSpectrum& spec) {
  int shift = spec.vertex_count() - spec.alpha();
  return Rational(BigInt(spec.maximum_independent_sets()), BigInt(1) << shift);
}

inline Rational c2_constant(const Graph& g) {
  return c2_constant(WeightingSpectrum(g));
}

/// C1(q): leading constant of the T(q) density as beta -> 0,
///   sum_i ctilde_i ((1 - q^2)/2)^i q^(2(v - alpha* - i)).
inline double c1_constant(const WeightingSpectrum& spec, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidArgument("c1_constant needs q in (0, 1)");
  }
  double deficit = spec.vertex_count() - to_double(spec.alpha_star());
  double sum = 0.0;
  const auto& ct = spec.ctilde();
  for (std::size_t i = 0; i < ct.size(); ++i) {
    if (ct[i]) {
      sum += static_cast<double>(ct[i]) * std::pow((1.0 - q * q) / 2.0, static_cast<double>(i)) *
             std::pow(q, 2.0 * (deficit - static_cast<double>(i)));
    }
  }
  return sum;
}

inline double c1_constant(const Graph& g, double q) {
  return c1_constant(WeightingSpectrum(g), q);
}

}  // namespace extremal
