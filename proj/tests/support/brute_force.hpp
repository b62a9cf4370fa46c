#pragma once

// Deliberately naive reference computations. Nothing here reuses the
// library's search code: each function scans the full space directly, so
// the tests compare two independent routes to the same number.

#include "extremal/graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace brute {

using Adjacency = std::vector<std::vector<bool>>;

inline Adjacency adjacency(const extremal::Graph& g) {
  int v = g.vertex_count();
  Adjacency a(v, std::vector<bool>(v, false));
  for (auto e : g.edges()) {
    a[e.u][e.w] = a[e.w][e.u] = true;
  }
  return a;
}

/// (r, y, b) -> multiplicity over all 3^v assignments of {0, 1/2, 1},
/// with weights kept as halves {0, 1, 2}.
inline std::map<std::tuple<int, int, int>, std::uint64_t> weightings(const extremal::Graph& g) {
  int v = g.vertex_count();
  auto a = adjacency(g);
  std::map<std::tuple<int, int, int>, std::uint64_t> out;
  long total = 1;
  for (int i = 0; i < v; ++i) {
    total *= 3;
  }
  std::vector<int> h(v);
  for (long code = 0; code < total; ++code) {
    long c = code;
    for (int i = 0; i < v; ++i) {
      h[i] = static_cast<int>(c % 3);
      c /= 3;
    }
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      for (int j = i + 1; j < v && ok; ++j) {
        if (a[i][j] && h[i] + h[j] > 2) {
          ok = false;
        }
      }
    }
    if (!ok) {
      continue;
    }
    int r = static_cast<int>(std::count(h.begin(), h.end(), 0));
    int y = static_cast<int>(std::count(h.begin(), h.end(), 1));
    int b = static_cast<int>(std::count(h.begin(), h.end(), 2));
    ++out[{r, y, b}];
  }
  return out;
}

/// Twice the fractional independence number, as the best y + 2b.
inline int doubled_alpha_star(const extremal::Graph& g) {
  int best = 0;
  for (const auto& [k, mult] : weightings(g)) {
    best = std::max(best, std::get<1>(k) + 2 * std::get<2>(k));
  }
  return best;
}

/// (alpha, number of independent sets of size alpha).
inline std::pair<int, std::uint64_t> alpha_and_count(const extremal::Graph& g) {
  int v = g.vertex_count();
  auto a = adjacency(g);
  int best = 0;
  std::uint64_t count = 0;
  for (unsigned s = 0; s < (1u << v); ++s) {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      for (int j = i + 1; j < v && ok; ++j) {
        ok = !((s >> i & 1) && (s >> j & 1) && a[i][j]);
      }
    }
    if (!ok) {
      continue;
    }
    int size = __builtin_popcount(s);
    if (size > best) {
      best = size;
      count = 1;
    } else if (size == best) {
      ++count;
    }
  }
  return {best, count};
}

/// Every map V(pattern) -> V(host) of size n^v. `injective` restricts to
/// injective maps.
inline std::uint64_t maps(const extremal::Graph& pattern, int n,
                          const std::function<bool(int, int)>& host_adjacent, bool injective) {
  int v = pattern.vertex_count();
  std::vector<int> f(v, 0);
  std::uint64_t count = 0;
  while (true) {
    bool ok = true;
    if (injective) {
      for (int i = 0; i < v && ok; ++i) {
        for (int j = i + 1; j < v && ok; ++j) {
          ok = f[i] != f[j];
        }
      }
    }
    for (auto e : pattern.edges()) {
      if (!ok) {
        break;
      }
      ok = f[e.u] != f[e.w] && host_adjacent(f[e.u], f[e.w]);
    }
    if (ok) {
      ++count;
    }
    int i = 0;
    while (i < v && ++f[i] == n) {
      f[i++] = 0;
    }
    if (i == v) {
      break;
    }
  }
  return count;
}

inline std::uint64_t hom(const extremal::Graph& pattern, const extremal::Graph& host) {
  auto a = adjacency(host);
  return maps(pattern, host.vertex_count(), [&](int x, int y) { return a[x][y]; }, false);
}

inline std::uint64_t injective(const extremal::Graph& pattern, const extremal::Graph& host) {
  auto a = adjacency(host);
  return maps(pattern, host.vertex_count(), [&](int x, int y) { return a[x][y]; }, true);
}

/// Permutations p with p(E) = E, by scanning all v! orderings.
inline std::uint64_t automorphisms(const extremal::Graph& g) {
  int v = g.vertex_count();
  auto a = adjacency(g);
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      for (int j = i + 1; j < v && ok; ++j) {
        ok = a[i][j] == a[p[i]][p[j]];
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

inline bool isomorphic(const extremal::Graph& x, const extremal::Graph& y) {
  if (x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count()) {
    return false;
  }
  int v = x.vertex_count();
  auto a = adjacency(x);
  auto b = adjacency(y);
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < v && ok; ++i) {
      for (int j = i + 1; j < v && ok; ++j) {
        ok = a[i][j] == b[p[i]][p[j]];
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Connected isomorphism classes on exactly v vertices: every edge subset
/// of K_v, filtered by connectivity and pairwise isomorphism rejection.
inline std::vector<extremal::Graph> connected_classes(int v) {
  std::vector<extremal::Edge> all;
  for (int i = 0; i < v; ++i) {
    for (int j = i + 1; j < v; ++j) {
      all.push_back({i, j});
    }
  }
  std::vector<extremal::Graph> reps;
  for (unsigned long s = 0; s < (1ul << all.size()); ++s) {
    std::vector<extremal::Edge> es;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (s >> k & 1) {
        es.push_back(all[k]);
      }
    }
    extremal::Graph g(v, es);
    if (!g.is_connected()) {
      continue;
    }
    bool seen = false;
    for (const auto& r : reps) {
      if (brute::isomorphic(r, g)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      reps.push_back(g);
    }
  }
  return reps;
}

/// graph6 for v <= 62, written straight from the format description:
/// N(v) = v + 63, then the upper triangle column by column, six bits per
/// byte, each byte offset by 63.
inline std::string graph6(const extremal::Graph& g) {
  int v = g.vertex_count();
  auto a = adjacency(g);
  std::vector<int> bits;
  for (int j = 1; j < v; ++j) {
    for (int i = 0; i < j; ++i) {
      bits.push_back(a[i][j] ? 1 : 0);
    }
  }
  while (bits.size() % 6 != 0) {
    bits.push_back(0);
  }
  std::string out(1, static_cast<char>(v + 63));
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (int t = 0; t < 6; ++t) {
      x = 2 * x + bits[k + t];
    }
    out += static_cast<char>(x + 63);
  }
  return out;
}

/// Hand-expanded quasi-star density of the six-vertex counterexample.
inline double g6_quasi_star_polynomial(double r, double b) {
  return std::pow(r, 6) + 6 * std::pow(r, 5) * b + 9 * std::pow(r, 4) * b * b +
         3 * std::pow(r, 3) * std::pow(b, 3);
}

/// Hand-grouped density of the same graph in the T(1/sqrt 2) host.
inline double g6_t_polynomial(double y, double r, double b) {
  double s = y + r;
  return std::pow(s, 6) + 2 * std::pow(s, 3) * r * r * b + 2 * s * s * std::pow(r, 3) * b +
         2 * std::pow(s, 4) * r * b + 2 * std::pow(r, 4) * b * b + 6 * s * std::pow(r, 3) * b * b +
         std::pow(s, 3) * r * b * b + 3 * std::pow(r, 3) * std::pow(b, 3);
}

/// Class fractions at q = 1/sqrt 2, written the direct way (with cancellation).
inline std::array<double, 3> half_sqrt_fractions(double beta) {
  double y = std::sqrt(beta / 2);
  double r = 1 - std::sqrt(1 - beta / 2);
  double b = std::sqrt(1 - beta / 2) - std::sqrt(beta / 2);
  return {y, r, b};
}

}  // namespace brute
