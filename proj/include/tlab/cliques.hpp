#ifndef TLAB_CLIQUES_HPP
#define TLAB_CLIQUES_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/rational.hpp"
#include "tlab/vertex_set.hpp"
#include "tlab/weights.hpp"

namespace tlab {

struct CliqueSet {
  std::vector<VertexSet> cliques;
  int source_n = 0;
};

inline bool is_clique(const Graph &g, VertexSet s) {
  for (int v : s)
    if (!(s - VertexSet::single(v)).subset_of(g.row(v)))
      return false;
  return true;
}

inline bool is_independent(const Graph &g, VertexSet s) {
  for (int v : s)
    if (!(g.row(v) & s).empty())
      return false;
  return true;
}

namespace detail {

// Bron-Kerbosch with Tomita pivoting.
inline void bron_kerbosch(const Graph &g, VertexSet r, VertexSet p, VertexSet x,
                          std::vector<VertexSet> &out) {
  if (p.empty()) {
    if (x.empty())
      out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    const int c = (p & g.row(u)).size();
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  for (int v : p - g.row(pivot)) {
    bron_kerbosch(g, r | VertexSet::single(v), p & g.row(v), x & g.row(v), out);
    p.erase(v);
    x.insert(v);
  }
}

// Greedy sequential colouring of `p` in ascending vertex order. Returns the
// vertices grouped by colour and, in parallel, the colour of each.
inline void greedy_colouring(const Graph &g, VertexSet p, std::vector<int> &order,
                             std::vector<int> &colour) {
  order.clear();
  colour.clear();
  int k = 0;
  while (!p.empty()) {
    ++k;
    VertexSet avail = p;
    while (!avail.empty()) {
      const int v = avail.min();
      avail -= g.row(v) | VertexSet::single(v);
      p.erase(v);
      order.push_back(v);
      colour.push_back(k);
    }
  }
}

inline void max_clique_expand(const Graph &g, VertexSet current, VertexSet p, int &best,
                              VertexSet &best_set) {
  std::vector<int> order, colour;
  greedy_colouring(g, p, order, colour);
  for (std::size_t i = order.size(); i-- > 0;) {
    if (current.size() + colour[i] <= best)
      return;
    const int v = order[i];
    const VertexSet next = current | VertexSet::single(v);
    const VertexSet np = p & g.row(v);
    if (np.empty()) {
      if (next.size() > best) {
        best = next.size();
        best_set = next;
      }
    } else {
      max_clique_expand(g, next, np, best, best_set);
    }
    p.erase(v);
  }
}

} // namespace detail

/// All inclusion-maximal cliques, sorted lexicographically.
inline CliqueSet maximal_cliques(const Graph &g) {
  require_word_sized(g, "maximal_cliques");
  CliqueSet cs;
  cs.source_n = g.order();
  if (g.order() == 0)
    return cs;
  detail::bron_kerbosch(g, VertexSet(), g.vertices(), VertexSet(), cs.cliques);
  std::sort(cs.cliques.begin(), cs.cliques.end(), lex_less);
  return cs;
}

/// A maximum clique found by branch and bound with a colouring bound.
inline VertexSet maximum_clique(const Graph &g) {
  require_word_sized(g, "clique_number");
  int best = 0;
  VertexSet best_set;
  detail::max_clique_expand(g, VertexSet(), g.vertices(), best, best_set);
  return best_set;
}

inline int clique_number(const Graph &g) { return maximum_clique(g).size(); }

struct WeightedClique {
  VertexSet clique;
  Rational weight;
};

/// Heaviest clique under w; among equal weights the lexicographically
/// smallest vertex set. Negative-weight vertices never enter the search.
inline WeightedClique max_weight_clique(const Graph &g, const WeightFn &w) {
  require_word_sized(g, "max_weight_clique");
  if (w.size() != g.order())
    throw InvalidInput("weight function length does not match the graph");
  VertexSet usable;
  for (int v = 0; v < g.order(); ++v)
    if (w[v] >= 0)
      usable.insert(v);

  // Candidates are explored in ascending order, so sets are visited in
  // lexicographic order and only strict improvements replace the incumbent.
  WeightedClique best{VertexSet(), Rational(0)};
  auto search = [&](auto &&self, VertexSet r, const Rational &wr, VertexSet p) -> void {
    if (wr > best.weight)
      best = {r, wr};
    Rational rest = w.sum(p);
    for (int v : p) {
      if (wr + rest <= best.weight)
        return;
      self(self, r | VertexSet::single(v), wr + w[v],
           (p & g.row(v)) - VertexSet::first(v + 1));
      rest -= w[v];
    }
  };
  search(search, VertexSet(), Rational(0), usable);
  return best;
}

inline VertexSet simplicial_vertices(const Graph &g) {
  require_word_sized(g, "simplicial_vertices");
  VertexSet out;
  for (int v = 0; v < g.order(); ++v)
    if (is_clique(g, g.row(v)))
      out.insert(v);
  return out;
}

inline void require_sigma_range(const Rational &sigma) {
  if (sigma < 0 || sigma > Rational(1, 2))
    throw InvalidInput("sigma must lie in [0, 1/2], got " + to_string(sigma));
}

struct SimplicialCondition {
  bool pass = true;
  /// A violating non-empty clique, when one exists.
  std::optional<VertexSet> witness;
  int witness_simplicial = 0;
  Rational witness_threshold;
};

/// Every non-empty clique K has at most (1 - sigma)(|K| - sigma) simplicial
/// vertices.
///
/// For sigma > 0 a lone simplicial vertex s already violates it, since
/// 1 > (1 - sigma)^2, and padding a clique with non-simplicial vertices only
/// raises the allowance; so the condition holds exactly when G has no
/// simplicial vertex. For sigma = 0 it always holds. The reported witness is
/// the literal violating clique {s} for the smallest simplicial s.
inline SimplicialCondition simplicial_clique_condition(const Graph &g, const Rational &sigma) {
  require_sigma_range(sigma);
  SimplicialCondition out;
  if (sigma == 0)
    return out;
  const VertexSet simp = simplicial_vertices(g);
  if (simp.empty())
    return out;
  const VertexSet k = VertexSet::single(simp.min());
  out.pass = false;
  out.witness = k;
  out.witness_simplicial = (k & simp).size();
  out.witness_threshold = (1 - sigma) * (k.size() - sigma);
  return out;
}

} // namespace tlab

#endif // TLAB_CLIQUES_HPP
