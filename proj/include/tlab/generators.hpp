#ifndef TLAB_GENERATORS_HPP
#define TLAB_GENERATORS_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/graph.hpp"

namespace tlab::gen {

inline Graph cycle(int n) {
  if (n < 3)
    throw InvalidInput("cycle needs n >= 3");
  Graph::Builder b(n);
  for (int v = 0; v < n; ++v)
    b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

inline Graph complete(int n) {
  if (n < 1)
    throw InvalidInput("complete graph needs n >= 1");
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      b.add_edge(u, v);
  return std::move(b).build();
}

/// Part index of each vertex in T_r(n): contiguous blocks, the first n mod r
/// blocks one larger.
inline std::vector<int> turan_parts(int n, int r) {
  std::vector<int> part(static_cast<std::size_t>(n));
  const int base = n / r, extra = n % r;
  int v = 0;
  for (int p = 0; p < r; ++p)
    for (int i = 0; i < base + (p < extra ? 1 : 0); ++i)
      part[static_cast<std::size_t>(v++)] = p;
  return part;
}

/// Complete r-partite graph on n vertices with balanced parts.
inline Graph turan(int n, int r) {
  if (n < 1 || r < 1 || r > n)
    throw InvalidInput("turan(n, r) needs 1 <= r <= n");
  const auto part = turan_parts(n, r);
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)])
        b.add_edge(u, v);
  return std::move(b).build();
}

/// K_{n/2,n/2} on parts {0..n/2-1} and {n/2..n-1}, minus the matching
/// {i, n/2 + i} for i < m.
inline Graph bipartite_minus_matching(int n, int m) {
  if (n < 2 || n % 2 != 0)
    throw InvalidInput("bipartite_minus_matching needs an even n >= 2");
  const int h = n / 2;
  if (m < 0 || m > h)
    throw InvalidInput("matching size must lie in [0, n/2]");
  Graph::Builder b(n);
  for (int i = 0; i < h; ++i)
    for (int j = 0; j < h; ++j)
      if (i != j || i >= m)
        b.add_edge(i, h + j);
  return std::move(b).build();
}

/// Cycle of the given length whose positions listed in `blown` become
/// K_t blobs. Vertices are numbered position by position.
inline Graph cycle_blowup(int length, const std::vector<int> &blown, int t) {
  if (t < 1)
    throw InvalidInput("blob size must be >= 1");
  std::vector<std::vector<int>> pos(static_cast<std::size_t>(length));
  int next = 0;
  for (int p = 0; p < length; ++p) {
    const bool big = std::find(blown.begin(), blown.end(), p) != blown.end();
    for (int i = 0; i < (big ? t : 1); ++i)
      pos[static_cast<std::size_t>(p)].push_back(next++);
  }
  Graph::Builder b(next);
  for (int p = 0; p < length; ++p) {
    const auto &here = pos[static_cast<std::size_t>(p)];
    const auto &succ = pos[static_cast<std::size_t>((p + 1) % length)];
    for (std::size_t i = 0; i < here.size(); ++i)
      for (std::size_t j = i + 1; j < here.size(); ++j)
        b.add_edge(here[i], here[j]);
    for (int u : here)
      for (int v : succ)
        b.add_edge(u, v);
  }
  return std::move(b).build();
}

/// C_5 with positions 1 and 4 replaced by K_t: vertex 0 sees both blobs,
/// vertices t+1 and t+2 form the opposite edge. n = 2t + 3.
inline Graph c5_blowup(int t) { return cycle_blowup(5, {1, 4}, t); }

/// C_7 with positions 0, 2 and 5 replaced by K_t. n = 3t + 4.
inline Graph c7_blowup(int t) { return cycle_blowup(7, {0, 2, 5}, t); }

/// Disjoint cliques of the given sizes; vertex 0 of each clique is joined to
/// vertex 0 of the next.
inline Graph clique_chain(const std::vector<int> &sizes) {
  if (sizes.empty())
    throw InvalidInput("clique_chain needs at least one clique");
  int n = 0;
  for (int s : sizes) {
    if (s < 1)
      throw InvalidInput("clique sizes must be >= 1");
    n += s;
  }
  Graph::Builder b(n);
  int start = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    for (int i = 0; i < sizes[c]; ++i)
      for (int j = i + 1; j < sizes[c]; ++j)
        b.add_edge(start + i, start + j);
    if (c + 1 < sizes.size())
      b.add_edge(start, start + sizes[c]);
    start += sizes[c];
  }
  return std::move(b).build();
}

/// Ten-vertex Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9.
inline Graph petersen() {
  Graph::Builder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(i, 5 + i);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return std::move(b).build();
}

inline Graph path(int n) {
  if (n < 1)
    throw InvalidInput("path needs n >= 1");
  Graph::Builder b(n);
  for (int v = 0; v + 1 < n; ++v)
    b.add_edge(v, v + 1);
  return std::move(b).build();
}

/// Dispatches a family name and integer parameters, as used by the CLI.
inline Graph generate(const std::string &family, const std::vector<int> &p) {
  auto want = [&](std::size_t k) {
    if (p.size() != k)
      throw InvalidInput(family + " takes " + std::to_string(k) + " parameter(s), got " +
                         std::to_string(p.size()));
  };
  if (family == "cycle") {
    want(1);
    return cycle(p[0]);
  }
  if (family == "complete") {
    want(1);
    return complete(p[0]);
  }
  if (family == "path") {
    want(1);
    return path(p[0]);
  }
  if (family == "turan") {
    want(2);
    return turan(p[0], p[1]);
  }
  if (family == "bipartite_minus_matching") {
    want(2);
    return bipartite_minus_matching(p[0], p[1]);
  }
  if (family == "c5_blowup") {
    want(1);
    return c5_blowup(p[0]);
  }
  if (family == "c7_blowup") {
    want(1);
    return c7_blowup(p[0]);
  }
  if (family == "clique_chain")
    return clique_chain(p);
  if (family == "petersen") {
    want(0);
    return petersen();
  }
  throw InvalidInput("unknown family '" + family + "'");
}

} // namespace tlab::gen

#endif // TLAB_GENERATORS_HPP
