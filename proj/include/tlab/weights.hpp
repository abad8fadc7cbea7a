#ifndef TLAB_WEIGHTS_HPP
#define TLAB_WEIGHTS_HPP

#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/graph.hpp"
#include "tlab/rational.hpp"

namespace tlab {

/// Per-vertex rational weights.
class WeightFn {
public:
  WeightFn() = default;
  explicit WeightFn(std::vector<Rational> w) : w_(std::move(w)) {}

  static WeightFn constant(int n, const Rational &q) {
    return WeightFn(std::vector<Rational>(static_cast<std::size_t>(n), q));
  }

  /// f(v) = 1/(d(v) + 1/2), the largest value the main bound allows.
  static WeightFn degree_caps(const Graph &g) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
      w.emplace_back(2, 2 * g.degree(v) + 1);
    return WeightFn(std::move(w));
  }

  /// f(v) = 1/d(v); every vertex needs degree >= 1.
  static WeightFn inverse_degree(const Graph &g) {
    std::vector<Rational> w;
    w.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) {
      if (g.degree(v) == 0)
        throw InvalidInput("1/d(v) is undefined at isolated vertex " + std::to_string(v));
      w.emplace_back(1, g.degree(v));
    }
    return WeightFn(std::move(w));
  }

  int size() const noexcept { return static_cast<int>(w_.size()); }
  const Rational &operator[](int v) const { return w_[static_cast<std::size_t>(v)]; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }
  const std::vector<Rational> &values() const noexcept { return w_; }

  Rational total() const {
    Rational s = 0;
    for (const auto &q : w_)
      s += q;
    return s;
  }

  Rational sum(VertexSet s) const {
    Rational t = 0;
    for (int v : s)
      t += (*this)[v];
    return t;
  }

  bool operator==(const WeightFn &) const = default;

private:
  std::vector<Rational> w_;
};

/// One rational ("p/q" or integer) per non-blank line.
inline WeightFn parse_weight_fn(std::istream &in) {
  std::vector<Rational> w;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos)
      continue;
    const auto b = line.find_last_not_of(" \t\r");
    try {
      w.push_back(parse_rational(std::string_view(line).substr(a, b - a + 1)));
    } catch (const InvalidInput &e) {
      throw InvalidInput("weights line " + std::to_string(number) + ": " + e.what());
    }
  }
  return WeightFn(std::move(w));
}

inline std::string encode_weight_fn(const WeightFn &f) {
  std::string out;
  for (const auto &q : f)
    out += to_string(q) + "\n";
  return out;
}

} // namespace tlab

#endif // TLAB_WEIGHTS_HPP
