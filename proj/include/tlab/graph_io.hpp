#ifndef TLAB_GRAPH_IO_HPP
#define TLAB_GRAPH_IO_HPP

#include <cstddef>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tlab/errors.hpp"
#include "tlab/graph.hpp"

namespace tlab {

/// Largest order expressible with a one-byte graph6 size field.
inline constexpr int kGraph6MaxOrder = 62;

// graph6 short form: byte 0 is 63 + n, then the upper triangle in column
// order (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed six bits per byte,
// most significant bit first, each byte offset by 63. Pad bits are zero.

inline std::string encode_graph6(const Graph &g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder)
    throw InvalidInput("graph6 long form is unsupported (n = " + std::to_string(n) + " > 62)");
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  if (line.empty())
    throw ParseError("empty graph6 string", 0);
  auto byte_at = [&](std::size_t i) {
    const int c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      throw ParseError("byte " + std::to_string(c) + " outside [63,126]", i);
    return c - 63;
  };
  const int n = byte_at(0);
  if (n > kGraph6MaxOrder)
    throw ParseError("graph6 long form (n > 62) is unsupported", 0);
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0)) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (line.size() < 1 + body)
    throw ParseError("graph6 string too short for n = " + std::to_string(n), line.size());
  for (std::size_t i = 1; i < line.size(); ++i)
    byte_at(i);
  if (line.size() > 1 + body)
    throw ParseError("trailing bytes after graph6 body", 1 + body);

  Graph::Builder b(n);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(1 + k / 6);
      if ((chunk >> (5 - k % 6)) & 1)
        b.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (byte_at(body) & pad_mask)
      throw ParseError("non-zero graph6 padding bits", body);
  }
  return std::move(b).build();
}

struct Graph6Line {
  std::size_t line_number; // 1-based
  std::string text;
  Graph graph;
};

/// Reads a graph6 file, one graph per line; blank lines are skipped.
/// A bad line raises ParseError mentioning its 1-based line number.
inline std::vector<Graph6Line> read_graph6_stream(std::istream &in) {
  std::vector<Graph6Line> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.empty())
      continue;
    try {
      Graph g = parse_graph6(line);
      out.push_back({number, line, std::move(g)});
    } catch (const ParseError &e) {
      throw ParseError("line " + std::to_string(number) + ": " + e.message(), e.offset());
    }
  }
  return out;
}

/// Edge-list text: "n m" then m lines "u v", 0-indexed, whitespace separated.
inline Graph parse_edge_list(std::istream &in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw InvalidInput("edge list must start with \"n m\"");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw InvalidInput("edge list ended after " + std::to_string(i) + " of " +
                         std::to_string(m) + " edges");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return build_graph(static_cast<int>(n), edges);
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

inline std::string encode_edge_list(const Graph &g) {
  const auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges)
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

} // namespace tlab

#endif // TLAB_GRAPH_IO_HPP
