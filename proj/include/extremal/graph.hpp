#pragma once

// Small labelled undirected graphs: representation, text formats, exhaustive
// invariants, canonical forms and enumeration up to isomorphism.
//
// Vertices are stored 0-indexed; every textual form (edge lists, reports)
// uses 1-indexed labels, so vertex i prints as i + 1.

#include "extremal/numeric.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace extremal {

struct Edge {
  int u;
  int w;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using VertexMask = std::uint32_t;

class Graph {
public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;

  /// Builds a graph on `vertex_count` vertices. Edges are 0-indexed pairs;
  /// self-loops, duplicates and out-of-range endpoints are rejected.
  Graph(int vertex_count, const std::vector<Edge>& edges) : vertex_count_(vertex_count) {
    if (vertex_count < 1 || vertex_count > kMaxVertices) {
      throw InvalidArgument("vertex count " + std::to_string(vertex_count) +
                            " outside [1, " + std::to_string(kMaxVertices) + "]");
    }
    adjacency_.assign(static_cast<std::size_t>(vertex_count), 0);
    for (Edge e : edges) {
      if (e.u < 0 || e.w < 0 || e.u >= vertex_count || e.w >= vertex_count) {
        throw InvalidArgument("edge endpoint out of range");
      }
      if (e.u == e.w) {
        throw InvalidArgument("self-loop at vertex " + std::to_string(e.u + 1));
      }
      if (e.u > e.w) {
        std::swap(e.u, e.w);
      }
      if (adjacency_[e.u] & bit(e.w)) {
        throw InvalidArgument("duplicate edge " + std::to_string(e.u + 1) + "-" +
                              std::to_string(e.w + 1));
      }
      adjacency_[e.u] |= bit(e.w);
      adjacency_[e.w] |= bit(e.u);
      edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
  }

  static Graph from_adjacency(const std::vector<VertexMask>& adjacency) {
    std::vector<Edge> edges;
    int v = static_cast<int>(adjacency.size());
    for (int u = 0; u < v; ++u) {
      for (int w = u + 1; w < v; ++w) {
        if (adjacency[u] & bit(w)) {
          edges.push_back({u, w});
        }
      }
    }
    return Graph(v, edges);
  }

  static constexpr VertexMask bit(int u) { return VertexMask{1} << u; }

  int vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<VertexMask>& adjacency() const noexcept { return adjacency_; }
  VertexMask neighbours(int u) const { return adjacency_.at(u); }
  VertexMask all_vertices() const noexcept { return (VertexMask{1} << vertex_count_) - 1; }
  bool adjacent(int u, int w) const { return (adjacency_.at(u) & bit(w)) != 0; }
  int degree(int u) const { return std::popcount(adjacency_.at(u)); }

  std::vector<int> isolated_vertices() const {
    std::vector<int> out;
    for (int u = 0; u < vertex_count_; ++u) {
      if (adjacency_[u] == 0) {
        out.push_back(u);
      }
    }
    return out;
  }

  bool has_isolated_vertices() const { return !isolated_vertices().empty(); }

  bool is_connected() const {
    VertexMask seen = 1;
    VertexMask frontier = 1;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f; f &= f - 1) {
        next |= adjacency_[std::countr_zero(f)];
      }
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == all_vertices();
  }

  Graph complement() const {
    std::vector<VertexMask> adj(adjacency_.size());
    for (int u = 0; u < vertex_count_; ++u) {
      adj[u] = all_vertices() & ~adjacency_[u] & ~bit(u);
    }
    return from_adjacency(adj);
  }

  /// Relabels so that old vertex u becomes perm[u].
  Graph relabelled(const std::vector<int>& perm) const {
    std::vector<Edge> edges;
    for (Edge e : edges_) {
      edges.push_back({perm.at(e.u), perm.at(e.w)});
    }
    return Graph(vertex_count_, edges);
  }

  /// 1-indexed edge list, with an explicit "n=k;" prefix whenever the
  /// maximum label alone would not recover the vertex count.
  std::string edge_list() const {
    std::string out;
    int max_label = 0;
    for (Edge e : edges_) {
      max_label = std::max(max_label, e.w + 1);
    }
    if (max_label != vertex_count_) {
      out = "n=" + std::to_string(vertex_count_) + ";";
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::to_string(edges_[i].u + 1) + "-" + std::to_string(edges_[i].w + 1);
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.adjacency_ == b.adjacency_;
  }

private:
  int vertex_count_ = 0;
  std::vector<VertexMask> adjacency_;
  std::vector<Edge> edges_;
};

// ---------------------------------------------------------------------------
// Text formats

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return std::string(s.substr(b, e - b));
}

inline long parse_label(const std::string& token, const std::string& context) {
  if (token.empty() || token.size() > 6 ||
      !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw InvalidArgument("malformed token '" + context + "'");
  }
  return std::stol(token);
}

}  // namespace detail

/// Parses "a-b,c-d,..." (1-indexed), optionally prefixed by "n=k;".
inline Graph parse_edge_list(std::string_view text) {
  std::string body = detail::trim(text);
  std::optional<long> declared;
  if (auto semi = body.find(';'); semi != std::string::npos) {
    std::string head = detail::trim(std::string_view(body).substr(0, semi));
    if (head.rfind("n=", 0) != 0) {
      throw InvalidArgument("malformed prefix '" + head + "'");
    }
    declared = detail::parse_label(detail::trim(head.substr(2)), head);
    if (*declared < 1) {
      throw InvalidArgument("declared vertex count must be positive");
    }
    body = detail::trim(std::string_view(body).substr(semi + 1));
  }

  std::vector<std::pair<long, long>> pairs;
  if (!body.empty()) {
    std::size_t start = 0;
    while (start <= body.size()) {
      std::size_t comma = body.find(',', start);
      std::string token =
          detail::trim(std::string_view(body).substr(start, comma == std::string::npos
                                                                ? std::string::npos
                                                                : comma - start));
      auto dash = token.find('-');
      if (dash == std::string::npos) {
        throw InvalidArgument("malformed token '" + token + "'");
      }
      long a = detail::parse_label(detail::trim(token.substr(0, dash)), token);
      long b = detail::parse_label(detail::trim(token.substr(dash + 1)), token);
      if (a < 1 || b < 1) {
        throw InvalidArgument("label below 1 in '" + token + "'");
      }
      if (a == b) {
        throw InvalidArgument("self-loop in '" + token + "'");
      }
      if (declared && (a > *declared || b > *declared)) {
        throw InvalidArgument("label exceeds declared n in '" + token + "'");
      }
      pairs.emplace_back(a, b);
      if (comma == std::string::npos) {
        break;
      }
      start = comma + 1;
    }
  }

  long v = declared.value_or(0);
  for (auto [a, b] : pairs) {
    v = std::max({v, a, b});
  }
  if (v < 1) {
    throw InvalidArgument("empty edge list without a declared vertex count");
  }
  if (v > Graph::kMaxVertices) {
    throw InvalidArgument("vertex count " + std::to_string(v) + " exceeds cap of " +
                          std::to_string(Graph::kMaxVertices));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) {
    edges.push_back({static_cast<int>(a - 1), static_cast<int>(b - 1)});
  }
  return Graph(static_cast<int>(v), edges);
}

inline Graph parse_graph6(std::string_view text) {
  std::string s = detail::trim(text);
  if (s.rfind(">>graph6<<", 0) == 0) {
    s = s.substr(10);
  }
  if (s.empty()) {
    throw InvalidArgument("empty graph6 string");
  }
  for (char c : s) {
    if (c < 63 || c > 126) {
      throw InvalidArgument("graph6 byte out of range");
    }
  }
  int v = s[0] - 63;
  if (v > 62) {
    throw InvalidArgument("graph6 multi-byte size form is not supported");
  }
  if (v < 1 || v > Graph::kMaxVertices) {
    throw InvalidArgument("graph6 vertex count " + std::to_string(v) + " outside [1, " +
                          std::to_string(Graph::kMaxVertices) + "]");
  }
  std::size_t bits = static_cast<std::size_t>(v) * (v - 1) / 2;
  std::size_t bytes = (bits + 5) / 6;
  if (s.size() < 1 + bytes) {
    throw InvalidArgument("truncated graph6 bit field");
  }
  if (s.size() > 1 + bytes) {
    throw InvalidArgument("trailing bytes after graph6 bit field");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < v; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[1 + k / 6] - 63;
      if (byte & (1 << (5 - k % 6))) {
        edges.push_back({i, j});
      }
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((s[1 + k / 6] - 63) & (1 << (5 - k % 6))) {
      throw InvalidArgument("non-zero graph6 padding bits");
    }
  }
  return Graph(v, edges);
}

inline std::string write_graph6(const Graph& g) {
  int v = g.vertex_count();
  std::string out(1, static_cast<char>(v + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < v; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + 63);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) {
    out += static_cast<char>((acc << (6 - filled)) + 63);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Independent sets

struct GraphInvariants {
  int alpha = 0;
  BigInt max_independent_set_count = 0;
  std::vector<std::uint64_t> independent_counts;  // i_0 .. i_v
  std::optional<std::uint64_t> automorphism_count;
};

inline bool is_independent(const Graph& g, VertexMask set) {
  for (VertexMask s = set; s; s &= s - 1) {
    if (g.neighbours(std::countr_zero(s)) & set) {
      return false;
    }
  }
  return true;
}

/// Counts independent sets by size via a full 2^v subset scan.
inline std::vector<std::uint64_t> independent_set_counts(const Graph& g) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (VertexMask s = 0; s <= g.all_vertices(); ++s) {
    if (is_independent(g, s)) {
      ++counts[std::popcount(s)];
    }
  }
  return counts;
}

inline int independence_number(const Graph& g) {
  auto counts = independent_set_counts(g);
  int alpha = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k]) {
      alpha = static_cast<int>(k);
    }
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Colour refinement, canonical form, automorphisms

namespace detail {

/// Iterated degree refinement. The resulting colours are isomorphism
/// invariant: colour classes are ranked by their signature only.
inline std::vector<int> refined_colours(const Graph& g) {
  int v = g.vertex_count();
  std::vector<int> colour(v, 0);
  int classes = 1;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> signature(v);
    for (int u = 0; u < v; ++u) {
      signature[u].first = colour[u];
      for (VertexMask n = g.neighbours(u); n; n &= n - 1) {
        signature[u].second.push_back(colour[std::countr_zero(n)]);
      }
      std::sort(signature[u].second.begin(), signature[u].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (const auto& s : signature) {
      rank.emplace(s, 0);
    }
    int next = 0;
    for (auto& [key, r] : rank) {
      r = next++;
    }
    for (int u = 0; u < v; ++u) {
      colour[u] = rank[signature[u]];
    }
    if (next == classes) {
      return colour;
    }
    classes = next;
  }
}

using CanonicalCode = unsigned __int128;

struct CanonicalSearch {
  const Graph& g;
  std::vector<int> colour;
  std::vector<int> position_colour;  // colour required at each output position
  std::vector<int> order;            // order[pos] = original vertex
  std::vector<int> best_order;
  CanonicalCode best = 0;
  bool have_best = false;

  // Column bits for position k against earlier positions, most significant
  // first; smaller codes win.
  CanonicalCode column(int k) const {
    CanonicalCode col = 0;
    for (int i = 0; i < k; ++i) {
      col = (col << 1) | (g.adjacent(order[i], order[k]) ? 1 : 0);
    }
    return col;
  }

  void search(int k, VertexMask used, CanonicalCode prefix, int prefix_bits, bool tied) {
    int v = g.vertex_count();
    if (k == v) {
      if (!have_best || prefix < best) {
        best = prefix;
        best_order = order;
        have_best = true;
      }
      return;
    }
    for (int u = 0; u < v; ++u) {
      if ((used & Graph::bit(u)) || colour[u] != position_colour[k]) {
        continue;
      }
      order[k] = u;
      CanonicalCode code = (prefix << k) | column(k);
      int bits = prefix_bits + k;
      bool still_tied = tied;
      if (have_best && tied) {
        int total = v * (v - 1) / 2;
        CanonicalCode best_prefix = best >> (total - bits);
        if (code > best_prefix) {
          continue;
        }
        still_tied = code == best_prefix;
      }
      search(k + 1, used | Graph::bit(u), code, bits, still_tied);
    }
  }
};

}  // namespace detail

struct CanonicalForm {
  detail::CanonicalCode code = 0;
  int vertex_count = 0;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator<(const CanonicalForm& a, const CanonicalForm& b) {
    return a.vertex_count != b.vertex_count ? a.vertex_count < b.vertex_count : a.code < b.code;
  }
};

inline constexpr int kMaxCanonicalVertices = 10;

/// Minimum upper-triangle encoding over all vertex orders that list the
/// refined colour classes in rank order. Returns the code and the order
/// achieving it (order[pos] = original vertex).
inline std::pair<CanonicalForm, std::vector<int>> canonical_labelling(const Graph& g) {
  int v = g.vertex_count();
  if (v > kMaxCanonicalVertices) {
    throw InvalidArgument("canonical form limited to " + std::to_string(kMaxCanonicalVertices) +
                          " vertices");
  }
  detail::CanonicalSearch s{g, detail::refined_colours(g), {}, std::vector<int>(v), {}, 0, false};
  s.position_colour = s.colour;
  std::sort(s.position_colour.begin(), s.position_colour.end());
  s.search(0, 0, 0, 0, true);
  return {CanonicalForm{s.best, v}, s.best_order};
}

inline CanonicalForm canonical_form(const Graph& g) {
  return canonical_labelling(g).first;
}

/// The representative of g's isomorphism class in canonical labelling.
inline Graph canonical_graph(const Graph& g) {
  auto [form, order] = canonical_labelling(g);
  std::vector<int> perm(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    perm[order[pos]] = static_cast<int>(pos);
  }
  return g.relabelled(perm);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edge_count() == b.edge_count() &&
         canonical_form(a) == canonical_form(b);
}

inline constexpr int kMaxAutomorphismVertices = 10;

/// Number of adjacency-preserving permutations, by backtracking over maps
/// that respect the refined colouring.
inline std::uint64_t automorphism_count(const Graph& g) {
  int v = g.vertex_count();
  if (v > kMaxAutomorphismVertices) {
    throw InvalidArgument("automorphism count limited to " +
                          std::to_string(kMaxAutomorphismVertices) + " vertices");
  }
  auto colour = detail::refined_colours(g);
  std::vector<int> image(v, -1);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, int u, VertexMask used) -> void {
    if (u == v) {
      ++count;
      return;
    }
    for (int x = 0; x < v; ++x) {
      if ((used & Graph::bit(x)) || colour[x] != colour[u]) {
        continue;
      }
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) {
        ok = g.adjacent(u, w) == g.adjacent(x, image[w]);
      }
      if (ok) {
        image[u] = x;
        self(self, u + 1, used | Graph::bit(x));
      }
    }
  };
  extend(extend, 0, 0);
  return count;
}

inline GraphInvariants graph_invariants(const Graph& g) {
  GraphInvariants inv;
  inv.independent_counts = independent_set_counts(g);
  for (std::size_t k = 0; k < inv.independent_counts.size(); ++k) {
    if (inv.independent_counts[k]) {
      inv.alpha = static_cast<int>(k);
    }
  }
  inv.max_independent_set_count = inv.independent_counts[inv.alpha];
  if (g.vertex_count() <= kMaxAutomorphismVertices) {
    inv.automorphism_count = automorphism_count(g);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Enumeration up to isomorphism

/// One canonical representative for every isomorphism class of graphs on
/// n vertices with exactly `edges` edges, ordered by canonical code.
/// Built level by level (adding or removing one edge at a time, whichever
/// side is shorter) with canonical-form deduplication.
inline std::vector<Graph> graphs_with_edge_count(int n, int edges) {
  if (n < 1 || n > kMaxCanonicalVertices) {
    throw InvalidArgument("host enumeration limited to 1.." +
                          std::to_string(kMaxCanonicalVertices) + " vertices");
  }
  int max_edges = n * (n - 1) / 2;
  if (edges < 0 || edges > max_edges) {
    return {};
  }
  bool from_complete = edges > max_edges / 2;
  int steps = from_complete ? max_edges - edges : edges;

  std::vector<VertexMask> start(n, 0);
  if (from_complete) {
    for (int u = 0; u < n; ++u) {
      start[u] = ((VertexMask{1} << n) - 1) & ~Graph::bit(u);
    }
  }
  std::vector<Graph> level{canonical_graph(Graph::from_adjacency(start))};
  for (int step = 0; step < steps; ++step) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& g : level) {
      for (int u = 0; u < n; ++u) {
        for (int w = u + 1; w < n; ++w) {
          if (g.adjacent(u, w) != from_complete) {
            continue;
          }
          auto adj = g.adjacency();
          adj[u] ^= Graph::bit(w);
          adj[w] ^= Graph::bit(u);
          Graph h = Graph::from_adjacency(adj);
          auto [form, order] = canonical_labelling(h);
          if (!next.count(form)) {
            std::vector<int> perm(order.size());
            for (std::size_t pos = 0; pos < order.size(); ++pos) {
              perm[order[pos]] = static_cast<int>(pos);
            }
            next.emplace(form, h.relabelled(perm));
          }
        }
      }
    }
    level.clear();
    for (auto& [form, g] : next) {
      level.push_back(std::move(g));
    }
  }
  return level;
}

inline constexpr int kMaxEnumeratedVertices = 7;

/// Every connected isomorphism class on 2..max_v vertices, ordered by
/// vertex count, then edge count, then canonical code.
inline std::vector<Graph> enumerate_connected_graphs(int max_v) {
  if (max_v > kMaxEnumeratedVertices) {
    throw InvalidArgument("connected-graph enumeration limited to " +
                          std::to_string(kMaxEnumeratedVertices) + " vertices");
  }
  std::vector<Graph> out;
  for (int v = 2; v <= max_v; ++v) {
    for (int e = v - 1; e <= v * (v - 1) / 2; ++e) {
      for (Graph& g : graphs_with_edge_count(v, e)) {
        if (g.is_connected()) {
          out.push_back(std::move(g));
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named graphs

inline Graph complete_graph(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    for (int w = u + 1; w < k; ++w) {
      edges.push_back({u, w});
    }
  }
  return Graph(k, edges);
}

inline Graph empty_graph(int k) {
  return Graph(k, {});
}

/// Path with `length` edges (length + 1 vertices).
inline Graph path_graph(int length) {
  if (length < 1) {
    throw InvalidArgument("path length must be at least 1");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < length; ++u) {
    edges.push_back({u, u + 1});
  }
  return Graph(length + 1, edges);
}

inline Graph cycle_graph(int k) {
  if (k < 3) {
    throw InvalidArgument("cycle needs at least 3 vertices");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    edges.push_back({std::min(u, (u + 1) % k), std::max(u, (u + 1) % k)});
  }
  return Graph(k, edges);
}

/// K_{1,k}: centre is vertex 1.
inline Graph star_graph(int k) {
  if (k < 1) {
    throw InvalidArgument("star needs at least one leaf");
  }
  std::vector<Edge> edges;
  for (int leaf = 1; leaf <= k; ++leaf) {
    edges.push_back({0, leaf});
  }
  return Graph(k + 1, edges);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  int shift = a.vertex_count();
  std::vector<Edge> edges = a.edges();
  for (Edge e : b.edges()) {
    edges.push_back({e.u + shift, e.w + shift});
  }
  return Graph(shift + b.vertex_count(), edges);
}

/// Clique on 1..a, a vertex a+1 joined to clique vertex a, and b leaves
/// a+2..a+b+1 hanging off a+1. (3, 2) is the six-vertex graph G6.
inline Graph counterexample_family(int a, int b) {
  if (a < 3 || b < 2) {
    throw InvalidArgument("counterexample family needs a >= 3 and b >= 2");
  }
  if (a + b + 1 > Graph::kMaxVertices) {
    throw InvalidArgument("counterexample family exceeds vertex cap");
  }
  std::vector<Edge> edges = complete_graph(a).edges();
  int hub = a;
  edges.push_back({a - 1, hub});
  for (int leaf = 0; leaf < b; ++leaf) {
    edges.push_back({hub, hub + 1 + leaf});
  }
  return Graph(a + b + 1, edges);
}

inline Graph g6_graph() {
  return parse_edge_list("1-2,1-3,2-3,3-4,4-5,4-6");
}

}  // namespace extremal
