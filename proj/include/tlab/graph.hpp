#ifndef TLAB_GRAPH_HPP
#define TLAB_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/rational.hpp"
#include "tlab/vertex_set.hpp"

namespace tlab {

using Edge = std::pair<int, int>;

/// Undirected simple graph on vertices 0..n-1, stored as adjacency bit rows.
///
/// Rows span ceil(n/64) words, so any order is representable; the search
/// engines additionally require n <= 64 and read rows through row().
/// Values are immutable once built.
class Graph {
public:
  class Builder;

  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n)
      : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {
    if (n < 0)
      throw InvalidInput("negative vertex count");
  }

  int order() const noexcept { return n_; }

  bool adjacent(int u, int v) const {
    return (bits_[index(u, v / 64)] >> (v % 64)) & 1U;
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(bits_[index(v, w)]);
    return d;
  }

  /// Neighborhood of v as a VertexSet; requires order() <= 64.
  VertexSet row(int v) const { return VertexSet(bits_[static_cast<std::size_t>(v)]); }

  /// All vertices as a VertexSet; requires order() <= 64.
  VertexSet vertices() const { return VertexSet::first(n_); }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
      for (std::uint64_t b = bits_[index(v, w)]; b; b &= b - 1)
        out.push_back(w * 64 + std::countr_zero(b));
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t b : bits_)
      twice += static_cast<std::size_t>(std::popcount(b));
    return twice / 2;
  }

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v)
          out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph &) const = default;

private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;

  std::size_t index(int v, int word) const {
    return static_cast<std::size_t>(v) * words_ + word;
  }
  void set(int u, int v) { bits_[index(u, v / 64)] |= std::uint64_t{1} << (v % 64); }
};

class Graph::Builder {
public:
  explicit Builder(int n) : g_(n) {}
  /// Endpoints must be distinct and in range; duplicates are harmless.
  Builder &add_edge(int u, int v) {
    g_.set(u, v);
    g_.set(v, u);
    return *this;
  }
  Graph build() && { return std::move(g_); }

private:
  Graph g_;
};

/// Throws CapExceeded unless the graph fits the single-word search engines.
inline void require_word_sized(const Graph &g, const char *what) {
  if (g.order() > kWordVertices)
    throw CapExceeded(std::string(what) + ": graphs above " + std::to_string(kWordVertices) +
                      " vertices are not supported (n = " + std::to_string(g.order()) + ")");
}

inline Graph build_graph(int n, std::span<const Edge> edges) {
  if (n < 0)
    throw InvalidInput("negative vertex count");
  Graph::Builder b(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    if (u == v)
      throw InvalidInput("loop at vertex " + std::to_string(u));
    b.add_edge(u, v);
  }
  return std::move(b).build();
}

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// Walks every row and checks symmetry and irreflexivity.
inline bool is_valid(const Graph &g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u))
      return false;
    for (int v : g.neighbors(u))
      if (v >= g.order() || !g.adjacent(v, u))
        return false;
  }
  return true;
}

struct DegreeStats {
  std::vector<int> degrees;
  int delta = 0;
  std::size_t edge_count = 0;
  Rational avg_degree;
};

inline DegreeStats degree_stats(const Graph &g) {
  if (g.order() == 0)
    throw InvalidInput("minimum degree is undefined for the empty graph");
  DegreeStats s;
  s.degrees.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v)
    s.degrees.push_back(g.degree(v));
  s.delta = *std::min_element(s.degrees.begin(), s.degrees.end());
  s.edge_count = g.edge_count();
  s.avg_degree = Rational(2 * static_cast<long long>(s.edge_count), g.order());
  return s;
}

inline int min_degree(const Graph &g) { return degree_stats(g).delta; }

inline Graph complement(const Graph &g) {
  Graph::Builder b(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v))
        b.add_edge(u, v);
  return std::move(b).build();
}

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the vertex of the parent graph relabelled to i.
  std::vector<int> to_original;
};

/// Subgraph induced on `keep`, relabelled 0..|keep|-1 in ascending order.
inline InducedSubgraph induced_subgraph(const Graph &g, std::vector<int> keep) {
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (int v : keep)
    if (v < 0 || v >= g.order())
      throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
  const int k = static_cast<int>(keep.size());
  Graph::Builder b(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.adjacent(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]))
        b.add_edge(i, j);
  return {std::move(b).build(), std::move(keep)};
}

inline InducedSubgraph induced_subgraph(const Graph &g, VertexSet keep) {
  return induced_subgraph(g, keep.members());
}

/// Maps a set of subgraph vertices back to parent labels.
inline VertexSet lift(const InducedSubgraph &sub, VertexSet s) {
  VertexSet out;
  for (int v : s)
    out.insert(sub.to_original[static_cast<std::size_t>(v)]);
  return out;
}

} // namespace tlab

#endif // TLAB_GRAPH_HPP
