#ifndef TLAB_INDEPENDENCE_HPP
#define TLAB_INDEPENDENCE_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "tlab/cliques.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/vertex_set.hpp"

namespace tlab {

struct AlphaResult {
  int alpha = 0;
  VertexSet witness;
};

namespace detail {

// Size of a greedy clique cover of g[p]; bounds the independence number of
// g[p] from above.
inline int greedy_clique_cover(const Graph &g, VertexSet p) {
  int cliques = 0;
  while (!p.empty()) {
    ++cliques;
    VertexSet cand = p;
    while (!cand.empty()) {
      const int v = cand.min();
      p.erase(v);
      cand &= g.row(v);
    }
  }
  return cliques;
}

} // namespace detail

/// Exact independence number with the lexicographically smallest maximum
/// independent set as witness.
inline AlphaResult alpha_exact(const Graph &g) {
  require_word_sized(g, "alpha_exact");
  AlphaResult best;
  // Depth-first in lexicographic order: the first maximum found is the
  // lexicographically smallest, and pruning only discards subtrees that
  // cannot strictly beat it.
  auto search = [&](auto &&self, VertexSet r, VertexSet p) -> void {
    if (r.size() > best.alpha)
      best = {r.size(), r};
    for (int v : p) {
      if (r.size() + detail::greedy_clique_cover(g, p) <= best.alpha)
        return;
      p.erase(v);
      self(self, r | VertexSet::single(v), (p - g.row(v)) - VertexSet::first(v + 1));
    }
  };
  search(search, VertexSet(), g.vertices());
  return best;
}

inline constexpr int kDefaultEnumerationCap = 20;

/// Calls visit(VertexSet) on every independent set, the empty set included,
/// in increasing order of the bitmask value.
template <class Visit>
void enumerate_independent_sets(const Graph &g, Visit &&visit,
                                int max_n = kDefaultEnumerationCap) {
  if (g.order() > max_n)
    throw CapExceeded("independent-set enumeration refused: n = " + std::to_string(g.order()) +
                      " exceeds the cap " + std::to_string(max_n) +
                      "; raise the cap to enumerate larger graphs");
  require_word_sized(g, "enumerate_independent_sets");
  // Deciding the highest vertex first, exclusion before inclusion, emits the
  // leaves in binary counting order.
  auto rec = [&](auto &&self, int v, VertexSet chosen, VertexSet blocked) -> void {
    if (v < 0) {
      visit(chosen);
      return;
    }
    self(self, v - 1, chosen, blocked);
    if (!blocked.contains(v))
      self(self, v - 1, chosen | VertexSet::single(v), blocked | g.row(v));
  };
  rec(rec, g.order() - 1, VertexSet(), VertexSet());
}

inline std::vector<VertexSet> independent_sets(const Graph &g,
                                               int max_n = kDefaultEnumerationCap) {
  std::vector<VertexSet> out;
  enumerate_independent_sets(g, [&](VertexSet s) { out.push_back(s); }, max_n);
  return out;
}

namespace detail {

// DSATUR-ordered backtracking for k-colourability.
class KColouring {
public:
  KColouring(const Graph &g, int k) : g_(g), k_(k), colour_(static_cast<std::size_t>(g.order()), -1) {}

  bool run() { return extend(0, 0); }
  const std::vector<int> &colours() const { return colour_; }

private:
  const Graph &g_;
  int k_;
  std::vector<int> colour_;

  std::uint64_t neighbour_colours(int v) const {
    std::uint64_t m = 0;
    for (int u : g_.row(v))
      if (colour_[static_cast<std::size_t>(u)] >= 0)
        m |= std::uint64_t{1} << colour_[static_cast<std::size_t>(u)];
    return m;
  }

  bool extend(int coloured, int used) {
    if (coloured == g_.order())
      return true;
    int pick = -1, best_sat = -1, best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[static_cast<std::size_t>(v)] >= 0)
        continue;
      const int sat = std::popcount(neighbour_colours(v));
      const int deg = g_.degree(v);
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const std::uint64_t taken = neighbour_colours(pick);
    // A fresh colour is interchangeable with any other fresh colour.
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((taken >> c) & 1U)
        continue;
      colour_[static_cast<std::size_t>(pick)] = c;
      if (extend(coloured + 1, std::max(used, c + 1)))
        return true;
    }
    colour_[static_cast<std::size_t>(pick)] = -1;
    return false;
  }
};

} // namespace detail

/// True when g has a proper colouring with at most k colours.
inline bool is_k_colourable(const Graph &g, int k) {
  require_word_sized(g, "is_k_colourable");
  if (g.order() == 0)
    return true;
  if (k <= 0)
    return false;
  return detail::KColouring(g, k).run();
}

/// Exact chromatic number by trying k = 1, 2, ... in turn.
inline int chromatic_number_exact(const Graph &g, int max_n = kDefaultEnumerationCap) {
  if (g.order() > max_n)
    throw CapExceeded("chromatic number refused: n = " + std::to_string(g.order()) +
                      " exceeds the cap " + std::to_string(max_n));
  require_word_sized(g, "chromatic_number_exact");
  for (int k = 0;; ++k)
    if (is_k_colourable(g, k))
      return k;
}

} // namespace tlab

#endif // TLAB_INDEPENDENCE_HPP
