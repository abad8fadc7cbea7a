#ifndef TLAB_SWEEP_HPP
#define TLAB_SWEEP_HPP

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tlab/bounds.hpp"
#include "tlab/conjecture.hpp"
#include "tlab/corpus.hpp"
#include "tlab/errors.hpp"
#include "tlab/graph_io.hpp"
#include "tlab/inequality.hpp"
#include "tlab/record.hpp"
#include "tlab/stability.hpp"

namespace tlab {

namespace fs = std::filesystem;

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitStopped = 3;

/// Indexed, random-access source of graphs.
struct Corpus {
  std::string description;
  std::uint64_t size = 0;
  std::function<Graph(std::uint64_t)> at;
};

/// "N" or "A-B": every labeled graph on n vertices for n in [A, B], in order
/// of n and then edge mask.
inline Corpus enumerate_corpus(const std::string &spec) {
  int lo = 0, hi = 0;
  try {
    const auto dash = spec.find('-');
    std::size_t used = 0;
    lo = std::stoi(spec.substr(0, dash), &used);
    if (used != spec.substr(0, dash).size())
      throw InvalidInput("");
    hi = lo;
    if (dash != std::string::npos) {
      hi = std::stoi(spec.substr(dash + 1), &used);
      if (used != spec.size() - dash - 1)
        throw InvalidInput("");
    }
  } catch (const std::exception &) {
    throw InvalidInput("--enumerate expects N or A-B, got '" + spec + "'");
  }
  if (lo < 1 || lo > hi)
    throw InvalidInput("--enumerate range must satisfy 1 <= A <= B");
  require_enumerable(hi);
  std::vector<std::uint64_t> starts;
  std::uint64_t total = 0;
  for (int n = lo; n <= hi; ++n) {
    starts.push_back(total);
    total += labeled_graph_count(n);
  }
  Corpus c;
  c.description = "enumerate:" + spec;
  c.size = total;
  c.at = [lo, starts](std::uint64_t i) {
    std::size_t j = starts.size() - 1;
    while (starts[j] > i)
      --j;
    return labeled_graph(lo + static_cast<int>(j), i - starts[j]);
  };
  return c;
}

/// Every line is parsed up front; a malformed line aborts the run before any
/// record is written.
inline Corpus graph6_corpus(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw InvalidInput("cannot read corpus '" + path + "'");
  auto lines = std::make_shared<std::vector<Graph>>();
  for (auto &l : read_graph6_stream(in))
    lines->push_back(std::move(l.graph));
  Corpus c;
  c.description = "graph6:" + path;
  c.size = lines->size();
  c.at = [lines](std::uint64_t i) { return (*lines)[static_cast<std::size_t>(i)]; };
  return c;
}

inline Corpus generator_corpus(const std::vector<std::string> &specs) {
  auto graphs = std::make_shared<std::vector<Graph>>();
  std::string desc = "gen:";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    for (auto &g : generate_from_spec(specs[i]))
      graphs->push_back(std::move(g));
    desc += (i ? ";" : "") + specs[i];
  }
  Corpus c;
  c.description = desc;
  c.size = graphs->size();
  c.at = [graphs](std::uint64_t i) { return (*graphs)[static_cast<std::size_t>(i)]; };
  return c;
}

inline const std::vector<std::string> &graph_suites() {
  static const std::vector<std::string> s = {"thm-main-lp", "thm-sigma", "stability", "corollary",
                                             "conjecture"};
  return s;
}

inline const std::vector<std::string> &inequality_suites() {
  static const std::vector<std::string> s = {"ineq-claims", "ineq-lemma52", "ineq-finishing-blow",
                                             "ineq-appendix-a"};
  return s;
}

struct SweepConfig {
  std::string suite;
  std::optional<Corpus> corpus; // graph suites only
  std::vector<Rational> sigmas{Rational(1, 2)};
  std::vector<int> rs{2};
  int jobs = 1;
  int blowup_cap = kDefaultBlowupCap;

  std::optional<std::string> out_path; // stdout when absent
  std::optional<std::string> checkpoint_path;
  std::optional<std::string> cert_dir;
  /// Stop at the first batch boundary at or after this many units.
  std::optional<std::uint64_t> stop_after;
  std::uint64_t batch = 4096;

  int delta_max = 60;
  int n_max = 200;
  int r_max = 20;
  Rational step{1, 4};
  int budget = kDefaultBucketBudget;
};

struct SweepResult {
  int exit_code = kExitOk;
  std::uint64_t units = 0;
  std::map<std::string, std::uint64_t> counts;
  bool stopped = false;
};

/// Worker count: TLAB_JOBS when set, otherwise the hardware concurrency.
inline int default_jobs() {
  if (const char *env = std::getenv("TLAB_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0)
      return j;
  }
  const unsigned h = std::thread::hardware_concurrency();
  return h ? static_cast<int>(h) : 1;
}

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline constexpr std::uint64_t kFnvBasis = 14695981039346656037ULL;

inline std::uint64_t corpus_prefix_hash(const Corpus &c, std::uint64_t upto) {
  std::uint64_t h = kFnvBasis;
  for (std::uint64_t i = 0; i < upto; ++i) {
    h = fnv1a(h, graph_label(c.at(i)));
    h = fnv1a(h, "\n");
  }
  return h;
}

inline Json params_json(const SweepConfig &cfg) {
  Json p = Json::object();
  if (cfg.suite == "thm-sigma" || cfg.suite == "stability") {
    Json s = Json::array();
    for (const auto &q : cfg.sigmas)
      s.push_back(to_json(q));
    p["sigma"] = std::move(s);
  }
  if (cfg.suite == "stability" || cfg.suite == "corollary") {
    Json r = Json::array();
    for (int x : cfg.rs)
      r.push_back(x);
    p["r"] = std::move(r);
  }
  if (cfg.suite == "conjecture")
    p["blowup_cap"] = cfg.blowup_cap;
  return p;
}

template <class Check> VerificationRecord guarded(const Graph &g, const std::string &check, Json params,
                                                  Check &&fn) {
  try {
    return fn();
  } catch (const std::exception &e) {
    return error_record(graph_label(g), check, std::move(params), e.what());
  }
}

// All records for one graph, in parameter order.
inline std::vector<VerificationRecord> evaluate_graph(const SweepConfig &cfg, const Graph &g) {
  std::vector<VerificationRecord> out;
  const std::string &s = cfg.suite;
  if (s == "thm-main-lp") {
    out.push_back(guarded(g, s, Json::object(), [&] { return verify_lp_bound(g); }));
  } else if (s == "thm-sigma") {
    for (const auto &sigma : cfg.sigmas)
      out.push_back(guarded(g, s, {{"sigma", to_json(sigma)}},
                            [&] { return verify_sigma_theorem(g, sigma); }));
  } else if (s == "stability") {
    for (int r : cfg.rs)
      for (const auto &sigma : cfg.sigmas)
        out.push_back(guarded(g, s, {{"r", r}, {"sigma", to_json(sigma)}},
                              [&] { return verify_stability_theorem(g, r, sigma); }));
  } else if (s == "corollary") {
    for (int r : cfg.rs)
      out.push_back(guarded(g, s, {{"r", r}}, [&] { return verify_corollary(g, r); }));
  } else if (s == "conjecture") {
    out.push_back(guarded(g, s, {{"f", "1/d"}}, [&] { return verify_conjecture(g, cfg.blowup_cap); }));
  } else {
    throw InvalidInput("unknown suite '" + s + "'");
  }
  return out;
}

inline Json certificate_for(const SweepConfig &cfg, const Graph &g, const VerificationRecord &rec) {
  if (cfg.suite == "conjecture") {
    const WeightFn f = WeightFn::inverse_degree(g);
    return conjecture_certificate(g, f, conjecture_verdict(g, f, cfg.blowup_cap));
  }
  return rec.to_json();
}

struct Checkpoint {
  std::string suite;
  std::string corpus;
  Json params;
  std::uint64_t offset = 0;
  std::uint64_t records = 0;
  std::uint64_t output_bytes = 0;
  std::uint64_t prefix_hash = kFnvBasis;
  std::map<std::string, std::uint64_t> counts;
  bool complete = false;

  Json to_json() const {
    Json j;
    j["suite"] = suite;
    j["corpus"] = corpus;
    j["params"] = params;
    j["offset"] = offset;
    j["records"] = records;
    j["output_bytes"] = output_bytes;
    j["prefix_hash"] = prefix_hash;
    j["counts"] = counts;
    j["complete"] = complete;
    return j;
  }

  static Checkpoint from_json(const Json &j) {
    Checkpoint c;
    c.suite = j.at("suite").get<std::string>();
    c.corpus = j.at("corpus").get<std::string>();
    c.params = j.at("params");
    c.offset = j.at("offset").get<std::uint64_t>();
    c.records = j.at("records").get<std::uint64_t>();
    c.output_bytes = j.at("output_bytes").get<std::uint64_t>();
    c.prefix_hash = j.at("prefix_hash").get<std::uint64_t>();
    c.counts = j.at("counts").get<std::map<std::string, std::uint64_t>>();
    c.complete = j.at("complete").get<bool>();
    return c;
  }
};

inline void write_atomically(const std::string &path, const std::string &text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out)
      throw Error("cannot write '" + tmp + "'");
  }
  fs::rename(tmp, path);
}

inline Json summary_json(const std::string &suite, std::uint64_t units,
                         const std::map<std::string, std::uint64_t> &counts, int exit_code) {
  Json s;
  s["suite"] = suite;
  s["units"] = units;
  Json c;
  for (const char *k : {"OK", "HYPOTHESIS_FAIL", "COUNTEREXAMPLE", "ERROR"})
    c[k] = counts.count(k) ? counts.at(k) : 0;
  s["counts"] = std::move(c);
  s["exit_code"] = exit_code;
  Json j;
  j["summary"] = std::move(s);
  return j;
}

inline int exit_code_for(const std::map<std::string, std::uint64_t> &counts) {
  auto n = [&](const char *k) { return counts.count(k) ? counts.at(k) : 0; };
  return n("COUNTEREXAMPLE") + n("ERROR") > 0 ? kExitCounterexample : kExitOk;
}

inline SweepResult run_inequality_suite(const SweepConfig &cfg, std::ostream &out) {
  std::vector<GridReport> reports;
  if (cfg.suite == "ineq-claims") {
    reports.push_back(verify_claims_grid(cfg.delta_max, cfg.step));
  } else if (cfg.suite == "ineq-lemma52") {
    auto r = verify_bucket_oracle(std::min(cfg.delta_max, 15), std::min(cfg.budget, 14));
    reports.push_back(std::move(r.bound));
    reports.push_back(std::move(r.padded));
    reports.push_back(std::move(r.switching));
  } else if (cfg.suite == "ineq-finishing-blow") {
    reports.push_back(verify_finishing_blow_grid(cfg.delta_max, cfg.budget));
  } else if (cfg.suite == "ineq-appendix-a") {
    reports.push_back(verify_appendixA_grid(cfg.n_max, cfg.r_max));
  } else {
    throw InvalidInput("unknown suite '" + cfg.suite + "'");
  }
  SweepResult res;
  for (const auto &r : reports) {
    Json j = r.to_json();
    const char *verdict = r.pass() ? "OK" : "COUNTEREXAMPLE";
    j["verdict"] = verdict;
    ++res.counts[verdict];
    ++res.units;
    out << j.dump() << '\n';
  }
  res.exit_code = exit_code_for(res.counts);
  out << summary_json(cfg.suite, res.units, res.counts, res.exit_code).dump() << '\n';
  out.flush();
  return res;
}

} // namespace detail

/// Runs one suite and writes JSON lines: one per (graph, check, params) in
/// corpus order, then a summary line. Output bytes do not depend on jobs.
///
/// With a checkpoint path, progress is saved after every batch; when the
/// checkpoint already exists the run resumes from it, truncating any output
/// written after the last saved batch.
inline SweepResult run_suite(const SweepConfig &cfg, std::ostream *sink = nullptr) {
  const auto &ineq = inequality_suites();
  if (std::find(ineq.begin(), ineq.end(), cfg.suite) != ineq.end()) {
    if (cfg.out_path) {
      std::ofstream out(*cfg.out_path, std::ios::binary | std::ios::trunc);
      if (!out)
        throw InvalidInput("cannot write '" + *cfg.out_path + "'");
      return detail::run_inequality_suite(cfg, out);
    }
    return detail::run_inequality_suite(cfg, sink ? *sink : std::cout);
  }
  const auto &gs = graph_suites();
  if (std::find(gs.begin(), gs.end(), cfg.suite) == gs.end())
    throw InvalidInput("unknown suite '" + cfg.suite + "'");
  if (!cfg.corpus)
    throw InvalidInput("suite '" + cfg.suite + "' needs a graph source");
  if (cfg.checkpoint_path && !cfg.out_path)
    throw InvalidInput("--checkpoint requires --out");
  for (const auto &s : cfg.sigmas)
    require_sigma_range(s);
  for (int r : cfg.rs)
    if (r < 1)
      throw InvalidInput("r must be at least 1");

  const Corpus &corpus = *cfg.corpus;
  detail::Checkpoint cp;
  cp.suite = cfg.suite;
  cp.corpus = corpus.description;
  cp.params = detail::params_json(cfg);

  bool resuming = false;
  if (cfg.checkpoint_path && fs::exists(*cfg.checkpoint_path)) {
    std::ifstream in(*cfg.checkpoint_path);
    const detail::Checkpoint saved = detail::Checkpoint::from_json(Json::parse(in));
    if (saved.suite != cp.suite || saved.corpus != cp.corpus || saved.params != cp.params)
      throw InvalidInput("checkpoint belongs to a different run");
    if (saved.offset > corpus.size ||
        detail::corpus_prefix_hash(corpus, saved.offset) != saved.prefix_hash)
      throw InvalidInput("corpus changed since the checkpoint was written");
    if (!fs::exists(*cfg.out_path) || fs::file_size(*cfg.out_path) < saved.output_bytes)
      throw InvalidInput("output file is shorter than the checkpoint records");
    fs::resize_file(*cfg.out_path, saved.output_bytes);
    cp = saved;
    resuming = true;
  }

  std::ofstream file;
  std::ostream *out = sink ? sink : &std::cout;
  if (cfg.out_path) {
    file.open(*cfg.out_path, std::ios::binary | (resuming ? std::ios::app : std::ios::trunc));
    if (!file)
      throw InvalidInput("cannot write '" + *cfg.out_path + "'");
    out = &file;
  }
  if (cfg.cert_dir)
    fs::create_directories(*cfg.cert_dir);

  SweepResult res;
  auto save = [&] {
    if (cfg.checkpoint_path)
      detail::write_atomically(*cfg.checkpoint_path, cp.to_json().dump() + "\n");
  };
  if (cp.complete) {
    res.units = cp.offset;
    res.counts = cp.counts;
    res.exit_code = detail::exit_code_for(res.counts);
    return res;
  }

  const int jobs = std::max(1, cfg.jobs);
  std::uint64_t since_start = 0;
  while (cp.offset < corpus.size) {
    const std::uint64_t begin = cp.offset;
    const std::uint64_t end = std::min<std::uint64_t>(corpus.size, begin + cfg.batch);
    const std::size_t count = static_cast<std::size_t>(end - begin);
    std::vector<std::vector<VerificationRecord>> results(count);
    std::vector<Graph> graphs(count);
    std::atomic<std::size_t> next{0};
    constexpr std::size_t kChunk = 64;
    auto work = [&] {
      for (;;) {
        const std::size_t lo = next.fetch_add(kChunk);
        if (lo >= count)
          return;
        for (std::size_t i = lo; i < std::min(count, lo + kChunk); ++i) {
          graphs[i] = corpus.at(begin + i);
          results[i] = detail::evaluate_graph(cfg, graphs[i]);
        }
      }
    };
    if (jobs == 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t)
        pool.emplace_back(work);
      for (auto &t : pool)
        t.join();
    }

    std::string text;
    for (std::size_t i = 0; i < count; ++i) {
      cp.prefix_hash = detail::fnv1a(cp.prefix_hash, graph_label(graphs[i]));
      cp.prefix_hash = detail::fnv1a(cp.prefix_hash, "\n");
      for (const auto &rec : results[i]) {
        text += rec.to_line();
        text += '\n';
        ++cp.records;
        ++cp.counts[std::string(verdict_name(rec.verdict))];
        if (rec.verdict == Verdict::counterexample && cfg.cert_dir) {
          const std::string name = "cert-" + std::to_string(begin + i) + "-" + rec.check + ".json";
          detail::write_atomically((fs::path(*cfg.cert_dir) / name).string(),
                                   detail::certificate_for(cfg, graphs[i], rec).dump(2) + "\n");
        }
      }
    }
    *out << text;
    out->flush();
    cp.output_bytes += text.size();
    cp.offset = end;
    since_start += count;
    save();
    if (cfg.stop_after && since_start >= *cfg.stop_after && cp.offset < corpus.size) {
      res.stopped = true;
      res.units = cp.offset;
      res.counts = cp.counts;
      res.exit_code = kExitStopped;
      return res;
    }
  }

  res.units = cp.offset;
  res.counts = cp.counts;
  res.exit_code = detail::exit_code_for(res.counts);
  const std::string summary =
      detail::summary_json(cfg.suite, res.units, res.counts, res.exit_code).dump() + "\n";
  *out << summary;
  out->flush();
  cp.output_bytes += summary.size();
  cp.complete = true;
  save();
  return res;
}

} // namespace tlab

#endif // TLAB_SWEEP_HPP
