#ifndef TLAB_PROOF_STRUCTURE_HPP
#define TLAB_PROOF_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/cliques.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"
#include "tlab/weights.hpp"

namespace tlab {

/// Maximum-cardinality cliques among the minimum-degree vertices, in
/// lexicographic order. On general graphs these may overlap.
inline std::vector<VertexSet> base_cliques(const Graph &g) {
  require_word_sized(g, "base_cliques");
  if (g.order() == 0)
    throw InvalidInput("base cliques need a non-empty graph");
  const int delta = min_degree(g);
  VertexSet low;
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == delta)
      low.insert(v);
  const InducedSubgraph sub = induced_subgraph(g, low);
  const CliqueSet cs = maximal_cliques(sub.graph);
  int best = 0;
  for (VertexSet c : cs.cliques)
    best = std::max(best, c.size());
  std::vector<VertexSet> out;
  for (VertexSet c : cs.cliques)
    if (c.size() == best)
      out.push_back(lift(sub, c));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

struct BaseCliqueContext {
  VertexSet k;
  VertexSet a; // outside K, complete to K
  VertexSet u; // outside K and A, with a neighbour in K
  int ell = 0;
  int d = 0;
  int delta = 0;

  Json to_json() const {
    Json j;
    j["K"] = tlab::to_json(k);
    j["A"] = tlab::to_json(a);
    j["U"] = tlab::to_json(u);
    j["ell"] = ell;
    j["D"] = d;
    j["delta"] = delta;
    return j;
  }
};

inline bool is_base_clique(const Graph &g, VertexSet k) {
  const auto all = base_cliques(g);
  return std::find(all.begin(), all.end(), k) != all.end();
}

inline BaseCliqueContext base_clique_context(const Graph &g, VertexSet k) {
  if (!is_base_clique(g, k))
    throw InvalidInput(to_string(k) + " is not a base clique");
  BaseCliqueContext c;
  c.k = k;
  c.delta = min_degree(g);
  for (int v = 0; v < g.order(); ++v) {
    if (k.contains(v))
      continue;
    const VertexSet into_k = g.row(v) & k;
    if (into_k == k)
      c.a.insert(v);
    else if (!into_k.empty())
      c.u.insert(v);
  }
  c.ell = c.delta + 1 - (k | c.a).size();
  for (int v : k)
    if ((g.row(v) & c.u).size() != c.ell)
      throw Error("uniform attachment failed at vertex " + std::to_string(v));
  for (int x : c.u)
    c.d = std::max(c.d, (g.row(x) & k).size());
  return c;
}

struct FKWeights {
  InducedSubgraph rest; // G - K with its relabelling
  WeightFn weights;     // indexed by rest.graph's vertices
};

/// Reweighting of G - K: 1/(d + 1) on vertices simplicial in G - K,
/// 1/(d + 1/2) elsewhere, degrees taken in G - K.
inline FKWeights f_K_weights(const Graph &g, VertexSet k) {
  if (!is_base_clique(g, k))
    throw InvalidInput(to_string(k) + " is not a base clique");
  FKWeights out{induced_subgraph(g, g.vertices() - k), {}};
  const Graph &h = out.rest.graph;
  const VertexSet simp = simplicial_vertices(h);
  std::vector<Rational> w;
  for (int v = 0; v < h.order(); ++v)
    w.push_back(simp.contains(v) ? Rational(1, h.degree(v) + 1) : Rational(2, 2 * h.degree(v) + 1));
  out.weights = WeightFn(std::move(w));
  return out;
}

struct InequalitySides {
  Rational lhs;
  Rational rhs;
};

namespace detail {

// f_K indexed by original vertex; entries on K stay zero.
inline std::vector<Rational> f_K_by_original(const Graph &g, VertexSet k) {
  const FKWeights fk = f_K_weights(g, k);
  std::vector<Rational> out(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < fk.rest.graph.order(); ++i)
    out[static_cast<std::size_t>(fk.rest.to_original[static_cast<std::size_t>(i)])] = fk.weights[i];
  return out;
}

} // namespace detail

/// Both sides of the single-vertex gain inequality for v in K:
///
///     lhs = (ell + 1/2)/(delta + 3/2) - |K|/((delta + 3/2)(delta + 1/2))
///     rhs = sum_{u in U} f(u) - sum_{u in U \ N(v)} f_K(u)
///
/// f must satisfy the main bound's hypotheses; it defaults to the caps.
inline InequalitySides eval_single_lost_color(const Graph &g, VertexSet k, int v,
                                              std::optional<WeightFn> f = std::nullopt) {
  if (!k.contains(v))
    throw InvalidInput("vertex " + std::to_string(v) + " is not in " + to_string(k));
  const WeightFn w = f ? *f : WeightFn::degree_caps(g);
  if (!validate_weight_fn(g, w).ok())
    throw InvalidInput("weight function violates the main bound's hypotheses");
  const BaseCliqueContext c = base_clique_context(g, k);
  const auto fk = detail::f_K_by_original(g, k);
  const Rational dd = c.delta;
  const int ks = k.size();
  InequalitySides s;
  s.lhs = (c.ell + Rational(1, 2)) / (dd + Rational(3, 2)) -
          ks / ((dd + Rational(3, 2)) * (dd + Rational(1, 2)));
  s.rhs = w.sum(c.u);
  for (int u : c.u - g.row(v))
    s.rhs -= fk[static_cast<std::size_t>(u)];
  return s;
}

/// The averaged form over all of K:
///
///     lhs = ell + 1/2 - |K|/(delta + 1/2)
///     rhs = sum_{u in U} (x_u (delta + 3/2 - |K|) + |K|/2) / (|K| (delta + 2 - x_u)),
///
/// where x_u = |K ∩ N(u)|.
inline InequalitySides eval_averaging_inequality(const Graph &g, VertexSet k) {
  const BaseCliqueContext c = base_clique_context(g, k);
  const Rational dd = c.delta;
  const int ks = k.size();
  InequalitySides s;
  s.lhs = c.ell + Rational(1, 2) - ks / (dd + Rational(1, 2));
  s.rhs = 0;
  for (int u : c.u) {
    const int x = (g.row(u) & k).size();
    s.rhs += (x * (dd + Rational(3, 2) - ks) + Rational(ks, 2)) / (ks * (dd + 2 - x));
  }
  return s;
}

/// Everything the explorer prints about one base clique. The single-vertex
/// inequality is evaluated at the degree caps when they satisfy the main
/// bound's hypotheses, otherwise at the LP optimum, which always does.
inline Json explore_base_clique(const Graph &g, VertexSet k) {
  Json j = base_clique_context(g, k).to_json();
  WeightFn f = WeightFn::degree_caps(g);
  std::string source = "degree_caps";
  if (!validate_weight_fn(g, f).ok()) {
    f = lp_max_weight(g).weights;
    source = "lp_optimum";
  }
  const FKWeights fk = f_K_weights(g, k);
  Json fkj = Json::object();
  for (int i = 0; i < fk.rest.graph.order(); ++i)
    fkj[std::to_string(fk.rest.to_original[static_cast<std::size_t>(i)])] = to_json(fk.weights[i]);
  j["f_K"] = std::move(fkj);
  Json single = Json::array();
  for (int v : k) {
    const InequalitySides s = eval_single_lost_color(g, k, v, f);
    single.push_back({{"v", v}, {"lhs", to_json(s.lhs)}, {"rhs", to_json(s.rhs)}});
  }
  j["f_source"] = source;
  j["single_lost_color"] = std::move(single);
  const InequalitySides avg = eval_averaging_inequality(g, k);
  j["averaging"] = {{"lhs", to_json(avg.lhs)}, {"rhs", to_json(avg.rhs)}};
  return j;
}

} // namespace tlab

#endif // TLAB_PROOF_STRUCTURE_HPP
