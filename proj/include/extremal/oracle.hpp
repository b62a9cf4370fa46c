#pragma once

// Explicit finite hosts from the T(q) family and exact brute-force
// homomorphism / embedding counters. These are the ground truth that the
// closed-form densities are checked against.

#include "extremal/density.hpp"
#include "extremal/graph.hpp"
#include "extremal/numeric.hpp"
#include "extremal/weightings.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace extremal {

/// Undirected graph on up to a few thousand vertices, adjacency as rows of
/// 64-bit words.
class BitGraph {
public:
  using Word = std::uint64_t;

  BitGraph() = default;
  explicit BitGraph(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0) {
      throw InvalidArgument("negative vertex count");
    }
  }

  explicit BitGraph(const Graph& g) : BitGraph(g.vertex_count()) {
    for (Edge e : g.edges()) {
      add_edge(e.u, e.w);
    }
  }

  int vertex_count() const noexcept { return n_; }
  int words() const noexcept { return words_; }

  void add_edge(int u, int w) {
    if (u == w || u < 0 || w < 0 || u >= n_ || w >= n_) {
      throw InvalidArgument("bad host edge");
    }
    if (!adjacent(u, w)) {
      ++edge_count_;
    }
    row(u)[w / 64] |= Word{1} << (w % 64);
    row(w)[u / 64] |= Word{1} << (u % 64);
  }

  bool adjacent(int u, int w) const { return (row(u)[w / 64] >> (w % 64)) & 1U; }
  const Word* row(int u) const { return bits_.data() + static_cast<std::size_t>(u) * words_; }
  std::uint64_t edge_count() const noexcept { return edge_count_; }

private:
  Word* row(int u) { return bits_.data() + static_cast<std::size_t>(u) * words_; }

  int n_ = 0;
  int words_ = 0;
  std::vector<Word> bits_;
  std::uint64_t edge_count_ = 0;
};

enum class HostClass : char { Yellow = 'Y', Red = 'R', Blue = 'B' };

struct HostGraph {
  BitGraph graph;
  std::vector<HostClass> classes;  // yellow block, then red, then blue
  int yellow = 0;
  int red = 0;
  int blue = 0;
  int n = 0;
  double beta = 0.0;
  double q = 0.0;

  double target_edges() const { return beta * n * static_cast<double>(n) / 2.0; }
};

/// Finite T(q) host: |Y| and |R| rounded to nearest, remainder to B.
/// Y and R are cliques, R is complete to Y and B, B is independent.
inline HostGraph build_host(int n, double beta, double q) {
  if (n < 10) {
    throw InvalidArgument("host needs at least 10 vertices");
  }
  ClassFractions f = class_fractions(beta, q);
  long yellow = std::lround(f.y * n);
  long red = std::lround(f.r * n);
  long blue = n - yellow - red;
  if (blue < 0) {
    throw InvalidArgument("class rounding leaves a negative blue class");
  }
  HostGraph h;
  h.graph = BitGraph(n);
  h.n = n;
  h.beta = beta;
  h.q = q;
  h.yellow = static_cast<int>(yellow);
  h.red = static_cast<int>(red);
  h.blue = static_cast<int>(blue);
  h.classes.assign(static_cast<std::size_t>(h.yellow), HostClass::Yellow);
  h.classes.insert(h.classes.end(), static_cast<std::size_t>(h.red), HostClass::Red);
  h.classes.insert(h.classes.end(), static_cast<std::size_t>(h.blue), HostClass::Blue);
  for (int u = 0; u < n; ++u) {
    for (int w = u + 1; w < n; ++w) {
      HostClass a = h.classes[u];
      HostClass b = h.classes[w];
      bool edge = (a == HostClass::Yellow && b == HostClass::Yellow) ||
                  a == HostClass::Red || b == HostClass::Red;
      if (edge) {
        h.graph.add_edge(u, w);
      }
    }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Backtracking counter

inline constexpr std::uint64_t kDefaultNodeBudget = 1'000'000'000;
inline constexpr int kMaxPatternVertices = 8;

namespace detail {

/// Placement plan: a body placed one vertex at a time, each candidate set
/// the intersection of its placed neighbours' rows, then a tail of pairwise
/// non-adjacent vertices whose images are counted in closed form.
struct CountPlan {
  std::vector<int> body;
  std::vector<int> tail;
};

inline bool body_connected(const Graph& g, VertexMask body) {
  if (!body) {
    return true;
  }
  VertexMask seen = body & (~body + 1);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbours(std::countr_zero(f));
    }
    next &= body;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == body;
}

inline CountPlan make_plan(const Graph& g) {
  int v = g.vertex_count();
  std::vector<int> by_degree(v);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  bool connected = g.is_connected();
  VertexMask body = g.all_vertices();
  VertexMask tail = 0;
  for (int u : by_degree) {
    if (std::popcount(tail) == 5 || std::popcount(body) == 1) {
      break;
    }
    if (g.neighbours(u) & tail) {
      continue;
    }
    VertexMask rest = body & ~Graph::bit(u);
    if (connected && !body_connected(g, rest)) {
      continue;
    }
    body = rest;
    tail |= Graph::bit(u);
  }

  CountPlan plan;
  VertexMask placed = 0;
  while (placed != body) {
    int pick = -1;
    int pick_links = -1;
    for (int u = 0; u < v; ++u) {
      if (!(body & Graph::bit(u)) || (placed & Graph::bit(u))) {
        continue;
      }
      int links = std::popcount(g.neighbours(u) & placed);
      if (links > pick_links || (links == pick_links && g.degree(u) > g.degree(pick))) {
        pick = u;
        pick_links = links;
      }
    }
    plan.body.push_back(pick);
    placed |= Graph::bit(pick);
  }
  for (VertexMask t = tail; t; t &= t - 1) {
    plan.tail.push_back(std::countr_zero(t));
  }
  return plan;
}

/// Set partitions of {0..k-1} with their Moebius weights
/// prod over blocks (-1)^(|B|-1) (|B|-1)!, each block as a bit mask.
struct WeightedPartition {
  std::vector<unsigned> blocks;
  std::int64_t weight;
};

inline std::vector<WeightedPartition> set_partitions(int k) {
  std::vector<WeightedPartition> out;
  std::vector<unsigned> blocks;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k) {
      std::int64_t w = 1;
      for (unsigned b : blocks) {
        int size = std::popcount(b);
        std::int64_t f = 1;
        for (int j = 2; j < size; ++j) {
          f *= j;
        }
        w *= (size % 2 == 1 ? 1 : -1) * f;
      }
      out.push_back({blocks, w});
      return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= 1U << i;
      self(self, i + 1);
      blocks[j] &= ~(1U << i);
    }
    blocks.push_back(1U << i);
    self(self, i + 1);
    blocks.pop_back();
  };
  rec(rec, 0);
  return out;
}

class Counter {
public:
  using Word = BitGraph::Word;
  using Wide = unsigned __int128;

  Counter(const Graph& pattern, const BitGraph& host, bool injective, std::uint64_t budget)
      : pattern_(pattern), host_(host), injective_(injective), budget_(budget),
        plan_(make_plan(pattern)), words_(host.words()) {
    if (pattern.vertex_count() > kMaxPatternVertices) {
      throw InvalidArgument("pattern exceeds " + std::to_string(kMaxPatternVertices) +
                            " vertices");
    }
    image_.assign(static_cast<std::size_t>(pattern.vertex_count()), -1);
    used_.assign(static_cast<std::size_t>(words_), 0);
    all_.assign(static_cast<std::size_t>(words_), 0);
    for (int x = 0; x < host.vertex_count(); ++x) {
      all_[x / 64] |= Word{1} << (x % 64);
    }
    scratch_.assign(plan_.body.size() + 1, std::vector<Word>(static_cast<std::size_t>(words_)));
    int k = static_cast<int>(plan_.tail.size());
    tail_sets_.assign(std::size_t{1} << k, std::vector<Word>(static_cast<std::size_t>(words_)));
    tail_sizes_.assign(std::size_t{1} << k, 0);
    partitions_ = set_partitions(k);
  }

  BigInt run() {
    if (host_.vertex_count() == 0) {
      return 0;
    }
    place(0);
    return to_big(total_);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

private:
  static BigInt to_big(Wide w) {
    BigInt hi = static_cast<std::uint64_t>(w >> 64);
    return (hi << 64) + static_cast<std::uint64_t>(w);
  }

  void candidates_for(int u, std::vector<Word>& out) const {
    out = all_;
    for (VertexMask n = pattern_.neighbours(u); n; n &= n - 1) {
      int w = std::countr_zero(n);
      if (image_[w] < 0) {
        continue;
      }
      const Word* r = host_.row(image_[w]);
      for (int i = 0; i < words_; ++i) {
        out[i] &= r[i];
      }
    }
    if (injective_) {
      for (int i = 0; i < words_; ++i) {
        out[i] &= ~used_[i];
      }
    }
  }

  static std::uint64_t popcount(const std::vector<Word>& s) {
    std::uint64_t c = 0;
    for (Word w : s) {
      c += static_cast<std::uint64_t>(std::popcount(w));
    }
    return c;
  }

  void place(std::size_t depth) {
    if (++nodes_ > budget_) {
      throw BudgetExceeded("counting budget of " + std::to_string(budget_) + " nodes exceeded",
                           nodes_);
    }
    if (depth == plan_.body.size()) {
      total_ += count_tail();
      return;
    }
    int u = plan_.body[depth];
    auto& cand = scratch_[depth];
    candidates_for(u, cand);
    for (int i = 0; i < words_; ++i) {
      for (Word bits = cand[i]; bits; bits &= bits - 1) {
        int x = i * 64 + std::countr_zero(bits);
        image_[u] = x;
        used_[i] |= Word{1} << (x % 64);
        place(depth + 1);
        used_[i] &= ~(Word{1} << (x % 64));
      }
    }
    image_[u] = -1;
  }

  Wide count_tail() {
    const std::size_t k = plan_.tail.size();
    if (k == 0) {
      return 1;
    }
    if (!injective_) {
      Wide product = 1;
      for (int t : plan_.tail) {
        candidates_for(t, tail_sets_[0]);
        product *= popcount(tail_sets_[0]);
      }
      return product;
    }
    // Subset intersections of the tail candidate sets, then the Moebius
    // sum over set partitions counts tuples of pairwise distinct images.
    for (std::size_t i = 0; i < k; ++i) {
      candidates_for(plan_.tail[i], tail_sets_[std::size_t{1} << i]);
    }
    for (std::size_t s = 1; s < tail_sets_.size(); ++s) {
      std::size_t low = s & (~s + 1);
      if (s != low) {
        const auto& a = tail_sets_[low];
        const auto& b = tail_sets_[s ^ low];
        auto& out = tail_sets_[s];
        for (int i = 0; i < words_; ++i) {
          out[i] = a[i] & b[i];
        }
      }
      tail_sizes_[s] = popcount(tail_sets_[s]);
    }
    __int128 sum = 0;
    for (const auto& p : partitions_) {
      __int128 term = p.weight;
      for (unsigned b : p.blocks) {
        term *= static_cast<__int128>(tail_sizes_[b]);
      }
      sum += term;
    }
    return static_cast<Wide>(sum);
  }

  const Graph& pattern_;
  const BitGraph& host_;
  bool injective_;
  std::uint64_t budget_;
  CountPlan plan_;
  int words_;
  std::vector<int> image_;
  std::vector<Word> used_;
  std::vector<Word> all_;
  std::vector<std::vector<Word>> scratch_;
  std::vector<std::vector<Word>> tail_sets_;
  std::vector<std::uint64_t> tail_sizes_;
  std::vector<WeightedPartition> partitions_;
  std::uint64_t nodes_ = 0;
  Wide total_ = 0;
};

}  // namespace detail

/// Number of edge-preserving maps pattern -> host.
inline BigInt hom_count(const Graph& pattern, const BitGraph& host,
                        std::uint64_t budget = kDefaultNodeBudget) {
  return detail::Counter(pattern, host, false, budget).run();
}

inline BigInt hom_count(const Graph& pattern, const HostGraph& host,
                        std::uint64_t budget = kDefaultNodeBudget) {
  return hom_count(pattern, host.graph, budget);
}

inline BigInt hom_count(const Graph& pattern, const Graph& host,
                        std::uint64_t budget = kDefaultNodeBudget) {
  return hom_count(pattern, BitGraph(host), budget);
}

/// Number of injective edge-preserving maps (labelled copies).
inline BigInt injective_count(const Graph& pattern, const BitGraph& host,
                              std::uint64_t budget = kDefaultNodeBudget) {
  return detail::Counter(pattern, host, true, budget).run();
}

inline BigInt injective_count(const Graph& pattern, const HostGraph& host,
                              std::uint64_t budget = kDefaultNodeBudget) {
  return injective_count(pattern, host.graph, budget);
}

inline BigInt injective_count(const Graph& pattern, const Graph& host,
                              std::uint64_t budget = kDefaultNodeBudget) {
  return injective_count(pattern, BitGraph(host), budget);
}

/// Unlabelled copies: labelled copies divided by |Aut(pattern)|.
template <typename Host>
BigInt copies_count(const Graph& pattern, const Host& host,
                    std::uint64_t budget = kDefaultNodeBudget) {
  BigInt labelled = injective_count(pattern, host, budget);
  std::uint64_t aut = automorphism_count(pattern);
  if (labelled % aut != 0) {
    throw std::logic_error("labelled copy count not divisible by |Aut|");
  }
  return labelled / aut;
}

/// Labelled copies in a T(q) host, in closed form: every embedding sends
/// the weight-1/2, 0 and 1 vertices of exactly one weighting injectively
/// into Y, R and B respectively.
inline BigInt exact_injective_via_spectrum(const WeightingSpectrum& spec, const HostGraph& host) {
  BigInt total = 0;
  for (const auto& [c, mult] : spec.entries()) {
    total += BigInt(mult) * falling_factorial(host.yellow, c.y) *
             falling_factorial(host.red, c.r) * falling_factorial(host.blue, c.b);
  }
  return total;
}

// ---------------------------------------------------------------------------
// Convergence of finite counts to the asymptotic density

struct CountReport {
  int n = 0;
  double beta = 0.0;
  double q = 0.0;
  BigInt hom = 0;
  BigInt injective = 0;
  BigInt copies = 0;
  double normalised = 0.0;
  double t_reference = 0.0;
  double gap = 0.0;
};

struct ConvergenceReport {
  std::vector<CountReport> rows;
  /// Least-squares C in gap ~ C / n.
  std::optional<double> gap_constant;
  /// Fitted p in gap ~ n^-p (needs every gap positive).
  std::optional<double> decay_rate;
};

inline ConvergenceReport convergence_report(const Graph& pattern, double beta, double q,
                                            const std::vector<int>& n_list,
                                            std::uint64_t budget = kDefaultNodeBudget) {
  for (std::size_t i = 1; i < n_list.size(); ++i) {
    if (n_list[i] <= n_list[i - 1]) {
      throw InvalidArgument("n list must be strictly increasing");
    }
  }
  WeightingSpectrum spec(pattern);
  double t = t_density(spec, beta, q);
  std::uint64_t aut = automorphism_count(pattern);
  int v = pattern.vertex_count();

  ConvergenceReport report;
  for (int n : n_list) {
    HostGraph host = build_host(n, beta, q);
    CountReport row;
    row.n = n;
    row.beta = beta;
    row.q = q;
    row.hom = hom_count(pattern, host, budget);
    row.injective = injective_count(pattern, host, budget);
    row.copies = row.injective / aut;
    row.normalised = to_double(Rational(row.injective, boost::multiprecision::pow(BigInt(n), v)));
    row.t_reference = t;
    row.gap = std::abs(row.normalised - t);
    report.rows.push_back(std::move(row));
  }

  if (!report.rows.empty()) {
    double num = 0;
    double den = 0;
    for (const auto& r : report.rows) {
      num += r.gap / r.n;
      den += 1.0 / (static_cast<double>(r.n) * r.n);
    }
    report.gap_constant = num / den;
  }
  bool positive = report.rows.size() >= 2;
  for (const auto& r : report.rows) {
    positive = positive && r.gap > 0;
  }
  if (positive) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& r : report.rows) {
      double x = std::log(static_cast<double>(r.n));
      double y = std::log(r.gap);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    double m = static_cast<double>(report.rows.size());
    report.decay_rate = -(m * sxy - sx * sy) / (m * sxx - sx * sx);
  }
  return report;
}

}  // namespace extremal
