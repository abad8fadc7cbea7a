#ifndef TLAB_CORPUS_HPP
#define TLAB_CORPUS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/generators.hpp"
#include "tlab/graph.hpp"

namespace tlab {

inline constexpr int kMaxEnumeratedOrder = 7;

inline void require_enumerable(int n) {
  if (n < 0 || n > kMaxEnumeratedOrder)
    throw CapExceeded("exhaustive enumeration supports n <= " +
                      std::to_string(kMaxEnumeratedOrder) + " (got " + std::to_string(n) +
                      "); feed larger corpora as graph6 files");
}

/// 2^(n choose 2).
inline std::uint64_t labeled_graph_count(int n) {
  require_enumerable(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

/// The labeled graph whose edge set is `mask` over the pairs
/// (0,1), (0,2), ..., (0,n-1), (1,2), ... in that order.
inline Graph labeled_graph(int n, std::uint64_t mask) {
  require_enumerable(n);
  Graph::Builder b(n);
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1)
        b.add_edge(u, v);
  return std::move(b).build();
}

/// Calls visit(Graph) on every labeled graph on n vertices, in edge-mask
/// counting order.
template <class Visit> void enumerate_labeled_graphs(int n, Visit &&visit) {
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t m = 0; m < count; ++m)
    visit(labeled_graph(n, m));
}

/// Expands "family:p1,p2,..." where at most one parameter may be a range
/// "a..b"; clique_chain takes its sizes as the parameter list.
inline std::vector<Graph> generate_from_spec(const std::string &spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  std::vector<std::string> fields;
  if (colon != std::string::npos) {
    std::string rest = spec.substr(colon + 1);
    std::size_t start = 0;
    while (start <= rest.size()) {
      const auto comma = rest.find(',', start);
      fields.push_back(rest.substr(start, comma - start));
      if (comma == std::string::npos)
        break;
      start = comma + 1;
    }
  }
  auto to_int = [&](const std::string &s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size())
        throw InvalidInput("");
      return v;
    } catch (const std::exception &) {
      throw InvalidInput("bad generator parameter '" + s + "' in '" + spec + "'");
    }
  };
  int range_at = -1, lo = 0, hi = 0;
  std::vector<int> params;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto dots = fields[i].find("..");
    if (dots == std::string::npos) {
      params.push_back(to_int(fields[i]));
      continue;
    }
    if (range_at >= 0)
      throw InvalidInput("at most one parameter range allowed in '" + spec + "'");
    range_at = static_cast<int>(i);
    lo = to_int(fields[i].substr(0, dots));
    hi = to_int(fields[i].substr(dots + 2));
    if (lo > hi)
      throw InvalidInput("empty parameter range in '" + spec + "'");
    params.push_back(lo);
  }
  std::vector<Graph> out;
  if (range_at < 0) {
    out.push_back(gen::generate(family, params));
    return out;
  }
  for (int x = lo; x <= hi; ++x) {
    params[static_cast<std::size_t>(range_at)] = x;
    out.push_back(gen::generate(family, params));
  }
  return out;
}

} // namespace tlab

#endif // TLAB_CORPUS_HPP
