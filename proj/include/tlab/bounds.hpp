#ifndef TLAB_BOUNDS_HPP
#define TLAB_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlab/cliques.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/independence.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"
#include "tlab/simplex.hpp"
#include "tlab/weights.hpp"

namespace tlab {

/// Caro-Wei lower bound: sum of 1/(d(v) + 1). Zero for the empty graph.
inline Rational caro_wei(const Graph &g) {
  Rational s = 0;
  for (int v = 0; v < g.order(); ++v)
    s += Rational(1, g.degree(v) + 1);
  return s;
}

/// Sum of 1/(d(v) + 1 - sigma) for sigma in [0, 1/2].
inline Rational sigma_bound(const Graph &g, const Rational &sigma) {
  require_sigma_range(sigma);
  Rational s = 0;
  for (int v = 0; v < g.order(); ++v)
    s += 1 / (g.degree(v) + 1 - sigma);
  return s;
}

/// Per-vertex cap of the main bound, 1/(d + 1/2).
inline Rational degree_cap(int degree) { return Rational(2, 2 * degree + 1); }

struct HypothesisReport {
  bool per_vertex_ok = true;
  bool clique_ok = true;
  std::optional<int> violating_vertex;
  std::optional<WeightedClique> violating_clique;

  bool ok() const { return per_vertex_ok && clique_ok; }
};

inline void require_weights_for(const Graph &g, const WeightFn &f) {
  if (f.size() != g.order())
    throw InvalidInput("weight function has " + std::to_string(f.size()) +
                       " entries for a graph on " + std::to_string(g.order()) + " vertices");
  for (int v = 0; v < f.size(); ++v)
    if (f[v] < 0)
      throw InvalidInput("negative weight at vertex " + std::to_string(v) +
                         " (weights must be non-negative)");
}

/// Checks f(v) <= 1/(d(v) + 1/2) for every v and that no clique weighs more
/// than 1. Weights must be non-negative.
inline HypothesisReport validate_weight_fn(const Graph &g, const WeightFn &f) {
  require_weights_for(g, f);
  HypothesisReport rep;
  for (int v = 0; v < g.order(); ++v) {
    if (f[v] > degree_cap(g.degree(v))) {
      rep.per_vertex_ok = false;
      rep.violating_vertex = v;
      break;
    }
  }
  WeightedClique heavy = max_weight_clique(g, f);
  if (heavy.weight > 1) {
    rep.clique_ok = false;
    rep.violating_clique = std::move(heavy);
  }
  return rep;
}

inline Json hypothesis_payload(const HypothesisReport &rep) {
  Json p = Json::object();
  if (rep.violating_vertex)
    p["violating_vertex"] = *rep.violating_vertex;
  if (rep.violating_clique) {
    p["violating_clique"] = to_json(rep.violating_clique->clique);
    p["violating_clique_weight"] = to_json(rep.violating_clique->weight);
  }
  return p;
}

/// alpha(G) >= sum f whenever f satisfies the per-vertex and clique caps.
inline VerificationRecord verify_main_theorem(const Graph &g, const WeightFn &f) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "thm-main";
  const HypothesisReport rep = validate_weight_fn(g, f);
  if (!rep.ok()) {
    rec.verdict = Verdict::hypothesis_fail;
    rec.payload = hypothesis_payload(rep);
    return rec;
  }
  const AlphaResult a = alpha_exact(g);
  const Rational total = f.total();
  rec.verdict = a.alpha >= total ? Verdict::ok : Verdict::counterexample;
  rec.payload["alpha"] = a.alpha;
  rec.payload["witness"] = to_json(a.witness);
  rec.payload["lhs"] = to_json(Rational(a.alpha));
  rec.payload["rhs"] = to_json(total);
  return rec;
}

/// If the simplicial condition holds for sigma, alpha(G) >= sigma_bound.
inline VerificationRecord verify_sigma_theorem(const Graph &g, const Rational &sigma) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "thm-sigma";
  rec.params["sigma"] = to_json(sigma);
  const SimplicialCondition cond = simplicial_clique_condition(g, sigma);
  if (!cond.pass) {
    rec.verdict = Verdict::hypothesis_fail;
    rec.payload["witness_clique"] = to_json(*cond.witness);
    rec.payload["simplicial_in_witness"] = cond.witness_simplicial;
    rec.payload["allowed"] = to_json(cond.witness_threshold);
    return rec;
  }
  const AlphaResult a = alpha_exact(g);
  const Rational bound = sigma_bound(g, sigma);
  rec.verdict = a.alpha >= bound ? Verdict::ok : Verdict::counterexample;
  rec.payload["alpha"] = a.alpha;
  rec.payload["witness"] = to_json(a.witness);
  rec.payload["lhs"] = to_json(Rational(a.alpha));
  rec.payload["rhs"] = to_json(bound);
  return rec;
}

inline constexpr std::size_t kDefaultLpCliqueCap = 20000;

struct LpBound {
  Rational value;
  WeightFn weights;
  std::size_t constraints = 0;
  std::size_t pivots = 0;
};

namespace detail {

template <class Field>
lp::Solution<Field> solve_weight_lp(const Graph &g, const std::vector<VertexSet> &cliques) {
  const std::size_t n = static_cast<std::size_t>(g.order());
  std::vector<std::vector<Field>> a;
  std::vector<Field> b;
  a.reserve(n + cliques.size());
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<Field> row(n, Field(0));
    row[v] = Field(1);
    a.push_back(std::move(row));
    b.push_back(Field(2) / Field(2 * g.degree(static_cast<int>(v)) + 1));
  }
  for (VertexSet k : cliques) {
    std::vector<Field> row(n, Field(0));
    for (int v : k)
      row[static_cast<std::size_t>(v)] = Field(1);
    a.push_back(std::move(row));
    b.push_back(Field(1));
  }
  return lp::maximize(a, b, std::vector<Field>(n, Field(1)));
}

} // namespace detail

/// Largest sum f can reach under the main bound's hypotheses:
///
///     max sum f(v)  s.t.  0 <= f(v) <= 1/(d(v) + 1/2),
///                         sum over M of f <= 1 for each maximal clique M.
///
/// Solved exactly; returns the optimum and an optimal vertex of the polytope.
inline LpBound lp_max_weight(const Graph &g, std::size_t clique_cap = kDefaultLpCliqueCap) {
  LpBound out;
  if (g.order() == 0)
    return out;
  const CliqueSet cs = maximal_cliques(g);
  if (cs.cliques.size() > clique_cap)
    throw CapExceeded("lp_max_weight refused: " + std::to_string(cs.cliques.size()) +
                      " maximal cliques exceed the cap " + std::to_string(clique_cap));
  out.constraints = static_cast<std::size_t>(g.order()) + cs.cliques.size();
  std::vector<Rational> x;
  try {
    const auto sol = detail::solve_weight_lp<SmallRational>(g, cs.cliques);
    out.value = sol.objective.to_rational();
    out.pivots = sol.pivots;
    for (const auto &q : sol.x)
      x.push_back(q.to_rational());
  } catch (const RationalOverflow &) {
    auto sol = detail::solve_weight_lp<Rational>(g, cs.cliques);
    out.value = sol.objective;
    out.pivots = sol.pivots;
    x = std::move(sol.x);
  }
  out.weights = WeightFn(std::move(x));
  return out;
}

/// caro_wei(G) <= lp_max_weight(G) <= alpha(G).
inline VerificationRecord verify_lp_bound(const Graph &g) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "thm-main-lp";
  const LpBound lpb = lp_max_weight(g);
  const Rational cw = caro_wei(g);
  const AlphaResult a = alpha_exact(g);
  const bool upper = lpb.value <= a.alpha;
  const bool lower = cw <= lpb.value;
  rec.verdict = upper && lower ? Verdict::ok : Verdict::counterexample;
  rec.payload["lp"] = to_json(lpb.value);
  rec.payload["alpha"] = a.alpha;
  rec.payload["caro_wei"] = to_json(cw);
  Json w = Json::array();
  for (const auto &q : lpb.weights)
    w.push_back(to_json(q));
  rec.payload["weights"] = std::move(w);
  if (!upper)
    rec.payload["failed"] = "lp > alpha";
  else if (!lower)
    rec.payload["failed"] = "lp < caro_wei";
  return rec;
}

struct SigmaBracket {
  Rational lo;
  Rational hi;
};

/// Brackets the sigma at which sum 1/(d(v) + 1 - sigma) crosses `target`,
/// by exact bisection on [lo, hi]. The sum is increasing in sigma on
/// sigma < delta + 1; on return sum(lo) <= target < sum(hi).
inline SigmaBracket critical_sigma(const Graph &g, const Rational &target, Rational lo,
                                   Rational hi, int iterations = 40) {
  std::map<int, int> degree_count;
  for (int v = 0; v < g.order(); ++v)
    ++degree_count[g.degree(v)];
  if (degree_count.empty())
    throw InvalidInput("critical_sigma needs a non-empty graph");
  if (hi >= degree_count.begin()->first + 1)
    throw InvalidInput("bracket must stay below delta + 1");
  auto sum_at = [&](const Rational &s) {
    Rational t = 0;
    for (auto [d, c] : degree_count)
      t += Rational(c) / (d + 1 - s);
    return t;
  };
  if (sum_at(lo) > target || !(sum_at(hi) > target))
    throw InvalidInput("the crossing is not inside the given bracket");
  for (int i = 0; i < iterations; ++i) {
    const Rational mid = (lo + hi) / 2;
    if (sum_at(mid) > target)
      hi = mid;
    else
      lo = mid;
  }
  return {lo, hi};
}

} // namespace tlab

#endif // TLAB_BOUNDS_HPP
