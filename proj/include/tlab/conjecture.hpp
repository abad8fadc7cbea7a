#ifndef TLAB_CONJECTURE_HPP
#define TLAB_CONJECTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "tlab/cliques.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/independence.hpp"
#include "tlab/rational.hpp"
#include "tlab/record.hpp"
#include "tlab/weights.hpp"

namespace tlab {

inline constexpr int kDefaultBlowupCap = 14;

/// Parts P_0..P_{2k} of an odd-cycle blowup contained in G: each part a
/// non-empty clique, P_i complete to P_{i+1} (indices mod 2k + 1).
struct BlowupWitness {
  int k = 0;
  std::vector<VertexSet> parts;
  Rational weight;

  VertexSet vertices() const {
    VertexSet s;
    for (VertexSet p : parts)
      s |= p;
    return s;
  }
};

inline Json to_json(const BlowupWitness &b) {
  Json j;
  j["k"] = b.k;
  Json parts = Json::array();
  for (VertexSet p : b.parts)
    parts.push_back(to_json(p));
  j["parts"] = std::move(parts);
  j["weight"] = to_json(b.weight);
  return j;
}

/// Independent re-check of a blowup certificate, escape condition included.
inline bool validate_blowup(const Graph &g, const WeightFn &f, const BlowupWitness &b) {
  const std::size_t m = b.parts.size();
  if (b.k < 1 || m != static_cast<std::size_t>(2 * b.k + 1))
    return false;
  VertexSet seen;
  for (VertexSet p : b.parts) {
    if (p.empty() || !(p & seen).empty() || !is_clique(g, p))
      return false;
    seen |= p;
  }
  for (std::size_t i = 0; i < m; ++i) {
    const VertexSet next = b.parts[(i + 1) % m];
    for (int v : b.parts[i])
      if (!next.subset_of(g.row(v)))
        return false;
  }
  return f.sum(seen) == b.weight && b.weight > b.k;
}

namespace detail {

// Assigns vertices in index order to a part or to nothing. A vertex may join
// part i only when it is adjacent to everything already in parts i - 1, i,
// i + 1. The first used vertex goes to part 0, which removes rotations.
class BlowupSearch {
public:
  BlowupSearch(const Graph &g, const WeightFn &f, int k)
      : g_(g), f_(f), m_(2 * k + 1), parts_(static_cast<std::size_t>(m_)) {}

  // Heaviest blowup strictly heavier than floor, if any.
  std::optional<std::vector<VertexSet>> run(const Rational &floor) {
    best_weight_ = floor;
    best_.reset();
    dfs(0, Rational(0), false);
    return best_;
  }

  const Rational &best_weight() const { return best_weight_; }

private:
  bool fits(int v, int i) const {
    const VertexSet row = g_.row(v);
    const auto at = [&](int j) { return parts_[static_cast<std::size_t>((j + m_) % m_)]; };
    return (at(i - 1) | at(i) | at(i + 1)).subset_of(row);
  }

  void dfs(int v, const Rational &w, bool started) {
    int empty = 0;
    for (VertexSet p : parts_)
      empty += p.empty() ? 1 : 0;
    if (v == g_.order()) {
      if (empty == 0 && w > best_weight_) {
        best_weight_ = w;
        best_ = parts_;
      }
      return;
    }
    // Only vertices that still fit somewhere can add weight.
    Rational reachable = 0;
    int placeable = 0;
    for (int u = v; u < g_.order(); ++u) {
      for (int i = 0; i < m_; ++i) {
        if (fits(u, i)) {
          reachable += f_[u];
          ++placeable;
          break;
        }
      }
    }
    if (placeable < empty || w + reachable <= best_weight_)
      return;
    const int limit = started ? m_ : 1;
    for (int i = 0; i < limit; ++i) {
      if (!fits(v, i))
        continue;
      parts_[static_cast<std::size_t>(i)].insert(v);
      dfs(v + 1, w + f_[v], true);
      parts_[static_cast<std::size_t>(i)].erase(v);
    }
    dfs(v + 1, w, started);
  }

  const Graph &g_;
  const WeightFn &f_;
  int m_;
  std::vector<VertexSet> parts_;
  Rational best_weight_;
  std::optional<std::vector<VertexSet>> best_;
};

inline void require_blowup_inputs(const Graph &g, const WeightFn &f, int max_n) {
  if (g.order() > max_n)
    throw CapExceeded("blowup search refused: n = " + std::to_string(g.order()) +
                      " exceeds the cap " + std::to_string(max_n) +
                      "; raise the cap to search larger graphs");
  require_word_sized(g, "find_heavy_blowup");
  if (f.size() != g.order())
    throw InvalidInput("weight function length does not match the graph");
  for (int v = 0; v < g.order(); ++v)
    if (f[v] < 0)
      throw InvalidInput("blowup search needs non-negative weights");
}

} // namespace detail

/// For k = 2, 3, ..., k_max (while 2k + 1 <= n), the heaviest blowup of
/// C_{2k+1} contained in G as a subgraph; returns the first one heavier than
/// k. Blowups of C_3 are cliques and are left to the clique escape.
inline std::optional<BlowupWitness> find_heavy_blowup(const Graph &g, const WeightFn &f, int k_max,
                                                      int max_n = kDefaultBlowupCap) {
  if (k_max < 1)
    throw InvalidInput("k_max must be at least 1");
  detail::require_blowup_inputs(g, f, max_n);
  for (int k = 2; k <= k_max && 2 * k + 1 <= g.order(); ++k) {
    detail::BlowupSearch search(g, f, k);
    if (auto parts = search.run(Rational(k)))
      return BlowupWitness{k, std::move(*parts), search.best_weight()};
  }
  return std::nullopt;
}

enum class ConjectureOutcome { alpha_ok, clique_escape, blowup_escape, counterexample };

constexpr std::string_view outcome_name(ConjectureOutcome o) {
  switch (o) {
  case ConjectureOutcome::alpha_ok:
    return "ALPHA_OK";
  case ConjectureOutcome::clique_escape:
    return "CLIQUE_ESCAPE";
  case ConjectureOutcome::blowup_escape:
    return "BLOWUP_ESCAPE";
  case ConjectureOutcome::counterexample:
    return "COUNTEREXAMPLE";
  }
  return "COUNTEREXAMPLE";
}

struct ConjectureVerdict {
  ConjectureOutcome outcome = ConjectureOutcome::alpha_ok;
  AlphaResult alpha;
  Rational total;
  std::optional<WeightedClique> clique;
  std::optional<BlowupWitness> blowup;
  int k_max = 0; // blowup lengths searched: 2k + 1 for k in [2, k_max]
};

/// alpha(G) >= sum f unless some clique weighs more than 1 or some blowup of
/// C_{2k+1} weighs more than k. Requires 0 <= f(v) <= 1/d(v).
inline ConjectureVerdict conjecture_verdict(const Graph &g, const WeightFn &f,
                                            int max_n = kDefaultBlowupCap) {
  detail::require_blowup_inputs(g, f, max_n);
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0)
      throw InvalidInput("isolated vertex " + std::to_string(v) + ": 1/d(v) is undefined");
    if (f[v] > Rational(1, g.degree(v)))
      throw InvalidInput("f(" + std::to_string(v) + ") = " + to_string(f[v]) + " exceeds 1/d(v)");
  }
  ConjectureVerdict out;
  out.alpha = alpha_exact(g);
  out.total = f.total();
  out.k_max = (g.order() - 1) / 2;
  if (out.alpha.alpha >= out.total)
    return out;
  WeightedClique heavy = max_weight_clique(g, f);
  if (heavy.weight > 1) {
    out.outcome = ConjectureOutcome::clique_escape;
    out.clique = std::move(heavy);
    return out;
  }
  if (out.k_max >= 2) {
    if (auto b = find_heavy_blowup(g, f, out.k_max, max_n)) {
      out.outcome = ConjectureOutcome::blowup_escape;
      out.blowup = std::move(b);
      return out;
    }
  }
  out.outcome = ConjectureOutcome::counterexample;
  return out;
}

inline Json conjecture_payload(const ConjectureVerdict &v) {
  Json p;
  p["outcome"] = std::string(outcome_name(v.outcome));
  p["alpha"] = v.alpha.alpha;
  p["sum_f"] = to_json(v.total);
  if (v.clique) {
    p["clique"] = to_json(v.clique->clique);
    p["clique_weight"] = to_json(v.clique->weight);
  }
  if (v.blowup)
    p["blowup"] = to_json(*v.blowup);
  if (v.outcome == ConjectureOutcome::counterexample) {
    p["alpha_witness"] = to_json(v.alpha.witness);
    p["blowup_k_searched"] = {2, v.k_max};
  }
  return p;
}

/// Standalone certificate for a COUNTEREXAMPLE outcome.
inline Json conjecture_certificate(const Graph &g, const WeightFn &f, const ConjectureVerdict &v) {
  Json j;
  j["graph"] = graph_label(g);
  Json fj = Json::array();
  for (const auto &q : f)
    fj.push_back(to_json(q));
  j["f"] = std::move(fj);
  for (const auto &[key, val] : conjecture_payload(v).items())
    j[key] = val;
  j["max_clique_weight_at_most_1"] = true;
  return j;
}

/// Runs the verdict machine with f = 1/d(v). Escapes and ALPHA_OK map to OK
/// with the outcome recorded; graphs with an isolated vertex fail the
/// hypothesis.
inline VerificationRecord verify_conjecture(const Graph &g, int max_n = kDefaultBlowupCap) {
  VerificationRecord rec;
  rec.graph = graph_label(g);
  rec.check = "conjecture";
  rec.params["f"] = "1/d";
  if (g.order() == 0 || min_degree(g) == 0) {
    rec.verdict = Verdict::hypothesis_fail;
    rec.payload["reason"] = "isolated vertex";
    return rec;
  }
  const WeightFn f = WeightFn::inverse_degree(g);
  const ConjectureVerdict v = conjecture_verdict(g, f, max_n);
  rec.verdict = v.outcome == ConjectureOutcome::counterexample ? Verdict::counterexample : Verdict::ok;
  rec.payload = conjecture_payload(v);
  return rec;
}

} // namespace tlab

#endif // TLAB_CONJECTURE_HPP
