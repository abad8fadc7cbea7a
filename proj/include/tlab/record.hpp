#ifndef TLAB_RECORD_HPP
#define TLAB_RECORD_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "tlab/graph.hpp"
#include "tlab/graph_io.hpp"
#include "tlab/rational.hpp"
#include "tlab/vertex_set.hpp"

namespace tlab {

using Json = nlohmann::ordered_json;

enum class Verdict { ok, hypothesis_fail, counterexample, error };

constexpr std::string_view verdict_name(Verdict v) {
  switch (v) {
  case Verdict::ok:
    return "OK";
  case Verdict::hypothesis_fail:
    return "HYPOTHESIS_FAIL";
  case Verdict::counterexample:
    return "COUNTEREXAMPLE";
  case Verdict::error:
    return "ERROR";
  }
  return "ERROR";
}

inline Json to_json(const Rational &q) { return to_string(q); }

inline Json to_json(VertexSet s) {
  Json arr = Json::array();
  for (int v : s)
    arr.push_back(v);
  return arr;
}

/// graph6 where the format allows it, otherwise "edges:n:u-v,...".
inline std::string graph_label(const Graph &g) {
  if (g.order() <= kGraph6MaxOrder)
    return encode_graph6(g);
  std::string s = "edges:" + std::to_string(g.order()) + ":";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first)
      s += ',';
    s += std::to_string(u) + "-" + std::to_string(v);
    first = false;
  }
  return s;
}

/// One graph's verdict for one check. Payload fields are flattened into the
/// JSON object after the fixed keys; an ERROR record carries only a message.
struct VerificationRecord {
  std::string graph;
  std::string check;
  Json params = Json::object();
  Verdict verdict = Verdict::ok;
  Json payload = Json::object();
  std::string message;

  Json to_json() const {
    Json j;
    j["graph"] = graph;
    j["check"] = check;
    j["params"] = params;
    j["verdict"] = std::string(verdict_name(verdict));
    if (verdict == Verdict::error) {
      j["message"] = message;
      return j;
    }
    for (const auto &[k, v] : payload.items())
      j[k] = v;
    return j;
  }

  std::string to_line() const { return to_json().dump(); }
};

inline VerificationRecord error_record(std::string graph, std::string check, Json params,
                                       std::string message) {
  VerificationRecord r;
  r.graph = std::move(graph);
  r.check = std::move(check);
  r.params = std::move(params);
  r.verdict = Verdict::error;
  r.message = std::move(message);
  return r;
}

} // namespace tlab

#endif // TLAB_RECORD_HPP
