#ifndef TLAB_STABILITY_HPP
#define TLAB_STABILITY_HPP

#include <optional>
#include <vector>

#include "tlab/cliques.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/independence.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"

namespace tlab {

/// (1 - 1/r) n^2/2 - sigma n/2.
inline Rational edge_threshold(int n, int r, const Rational &sigma) {
  if (n < 1 || r < 1)
    throw InvalidInput("edge_threshold needs n >= 1 and r >= 1");
  require_sigma_range(sigma);
  return (1 - Rational(1, r)) * n * n / 2 - sigma * n / 2;
}

/// (1 - 1/r) n^2/2 - n/(2r) + 1.
inline Rational corollary_threshold(int n, int r) {
  if (n < 1 || r < 1)
    throw InvalidInput("corollary_threshold needs n >= 1 and r >= 1");
  return (1 - Rational(1, r)) * n * n / 2 - Rational(n, 2 * r) + 1;
}

/// Vertices of the independent set I adjacent to all of V \ I.
inline int complete_count(const Graph &g, VertexSet i) {
  const VertexSet rest = g.vertices() - i;
  int c = 0;
  for (int v : i)
    if (rest.subset_of(g.row(v)))
      ++c;
  return c;
}

struct StabilityWitness {
  VertexSet i;
  int complete_count = 0;
  Rational threshold; // (1 - sigma)(|I| - sigma)

  Rational margin() const { return complete_count - threshold; }
};

/// Exhaustive search over non-empty independent sets for one with
/// complete_count > (1 - sigma)(|I| - sigma). Returns the witness with the
/// largest margin, lexicographically smallest among ties.
inline std::optional<StabilityWitness>
find_stability_witness(const Graph &g, const Rational &sigma, int max_n = kDefaultEnumerationCap) {
  require_sigma_range(sigma);
  std::optional<StabilityWitness> best;
  enumerate_independent_sets(
      g,
      [&](VertexSet s) {
        if (s.empty())
          return;
        StabilityWitness w{s, complete_count(g, s), (1 - sigma) * (s.size() - sigma)};
        if (!(w.complete_count > w.threshold))
          return;
        if (!best) {
          best = w;
          return;
        }
        const Rational a = w.margin(), b = best->margin();
        if (a > b || (a == b && lex_less(s, best->i)))
          best = w;
      },
      max_n);
  return best;
}

inline Json to_json(const StabilityWitness &w) {
  Json j;
  j["I"] = to_json(w.i);
  j["complete_count"] = w.complete_count;
  j["threshold"] = to_json(w.threshold);
  return j;
}

/// If G is K_{r+1}-free with more than edge_threshold(n, r, sigma) edges, a
/// stability witness exists.
inline VerificationRecord verify_stability_theorem(const Graph &g, int r, const Rational &sigma) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "stability";
  rec.params["r"] = r;
  rec.params["sigma"] = to_json(sigma);
  const int omega = clique_number(g);
  const Rational threshold = edge_threshold(g.order(), r, sigma);
  const auto edges = static_cast<long long>(g.edge_count());
  rec.payload["omega"] = omega;
  rec.payload["edges"] = edges;
  rec.payload["edge_threshold"] = to_json(threshold);
  if (omega > r || !(Rational(edges) > threshold)) {
    rec.verdict = Verdict::hypothesis_fail;
    return rec;
  }
  const auto w = find_stability_witness(g, sigma);
  if (w) {
    rec.verdict = Verdict::ok;
    rec.payload["witness"] = to_json(*w);
    rec.payload["lhs"] = w->complete_count;
    rec.payload["rhs"] = to_json(w->threshold);
  } else {
    rec.verdict = Verdict::counterexample;
  }
  return rec;
}

/// Colour classes built by repeatedly taking a vertex v whose
/// non-neighbourhood in the current graph is independent, emitting that
/// non-neighbourhood, and continuing inside N(v). Fails when no such vertex
/// exists or more than r classes would be needed.
inline std::optional<std::vector<VertexSet>> peel_coloring(const Graph &g, int r) {
  require_word_sized(g, "peel_coloring");
  std::vector<VertexSet> classes;
  VertexSet s = g.vertices();
  while (!s.empty()) {
    if (is_independent(g, s)) {
      classes.push_back(s);
      break;
    }
    bool found = false;
    for (int v : s) {
      const VertexSet cls = s - g.row(v);
      if (is_independent(g, cls)) {
        classes.push_back(cls);
        s &= g.row(v);
        found = true;
        break;
      }
    }
    if (!found)
      return std::nullopt;
    if (static_cast<int>(classes.size()) > r)
      return std::nullopt;
  }
  if (static_cast<int>(classes.size()) > r)
    return std::nullopt;
  return classes;
}

/// A K_{r+1}-free graph with at least corollary_threshold(n, r) edges is
/// r-colourable; checked by peeling and by exact chromatic number.
inline VerificationRecord verify_corollary(const Graph &g, int r) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "corollary";
  rec.params["r"] = r;
  const int omega = clique_number(g);
  const Rational threshold = corollary_threshold(g.order(), r);
  const auto edges = static_cast<long long>(g.edge_count());
  rec.payload["omega"] = omega;
  rec.payload["edges"] = edges;
  rec.payload["edge_threshold"] = to_json(threshold);
  if (omega > r || Rational(edges) < threshold) {
    rec.verdict = Verdict::hypothesis_fail;
    return rec;
  }
  const auto classes = peel_coloring(g, r);
  const int chi = chromatic_number_exact(g);
  rec.payload["chi"] = chi;
  if (classes) {
    Json cj = Json::array();
    for (VertexSet c : *classes)
      cj.push_back(to_json(c));
    rec.payload["classes"] = std::move(cj);
  } else {
    rec.payload["classes"] = nullptr;
  }
  rec.verdict = classes && chi <= r ? Verdict::ok : Verdict::counterexample;
  return rec;
}

} // namespace tlab

#endif // TLAB_STABILITY_HPP
