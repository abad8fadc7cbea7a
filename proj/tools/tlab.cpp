// Command-line front end. Every command prints JSON (one value per line) or
// graph6 text on stdout. Exit codes: 0 clean, 1 counterexample or error
// record, 2 usage or ingestion error, 3 sweep stopped early.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlab.hpp"

using namespace tlab;

namespace {

Graph read_graph_arg(const std::string &text) {
  if (text == "-") {
    std::string line;
    if (!std::getline(std::cin, line))
      throw InvalidInput("expected a graph6 line on stdin");
    return parse_graph6(line);
  }
  return parse_graph6(text);
}

std::vector<Rational> parse_rationals(const std::vector<std::string> &texts) {
  std::vector<Rational> out;
  for (const auto &t : texts)
    out.push_back(parse_rational(t));
  return out;
}

Json alpha_json(const Graph &g) {
  const AlphaResult a = alpha_exact(g);
  Json j;
  j["graph"] = encode_graph6(g);
  j["alpha"] = a.alpha;
  j["witness"] = to_json(a.witness);
  return j;
}

int cmd_gen(const std::string &family, const std::vector<int> &params, const std::string &out_path) {
  const std::string line = encode_graph6(gen::generate(family, params)) + "\n";
  if (out_path.empty()) {
    std::cout << line;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!(out << line))
    throw InvalidInput("cannot write '" + out_path + "'");
  return kExitOk;
}

// "-" reads every graph6 line of stdin; anything else is one graph.
int cmd_alpha(const std::string &source) {
  if (source != "-") {
    std::cout << alpha_json(parse_graph6(source)).dump() << "\n";
    return kExitOk;
  }
  for (const auto &line : read_graph6_stream(std::cin))
    std::cout << alpha_json(line.graph).dump() << "\n";
  return kExitOk;
}

int cmd_bounds(const std::string &source, const std::string &sigma_text, const std::string &weights_path) {
  const Graph g = read_graph_arg(source);
  const Rational sigma = parse_rational(sigma_text);
  Json j;
  j["graph"] = encode_graph6(g);
  j["alpha"] = alpha_exact(g).alpha;
  j["caro_wei"] = to_json(caro_wei(g));
  j["sigma"] = to_json(sigma);
  j["sigma_bound"] = to_json(sigma_bound(g, sigma));
  j["thm_sigma"] = verify_sigma_theorem(g, sigma).to_json();
  j["lp"] = verify_lp_bound(g).to_json();
  int code = kExitOk;
  if (!weights_path.empty()) {
    std::ifstream in(weights_path);
    if (!in)
      throw InvalidInput("cannot read weights '" + weights_path + "'");
    const WeightFn f = parse_weight_fn(in);
    const VerificationRecord rec = verify_main_theorem(g, f);
    j["weights"] = rec.to_json();
    if (rec.verdict == Verdict::counterexample || rec.verdict == Verdict::error)
      code = kExitCounterexample;
  }
  std::cout << j.dump() << "\n";
  return code;
}

int cmd_explore(const std::string &source) {
  const Graph g = read_graph_arg(source);
  if (min_degree(g) == 0)
    throw InvalidInput("explore needs minimum degree at least 1");
  for (VertexSet k : base_cliques(g))
    std::cout << explore_base_clique(g, k).dump() << "\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  std::string enumerate;
  std::string in_path;
  std::vector<std::string> gen_specs;
  std::vector<std::string> sigmas;
  std::vector<int> rs;
  int jobs = 0;
  std::string checkpoint;
  std::string out;
  std::uint64_t stop_after = 0;
  std::string cert_dir;
  int blowup_cap = kDefaultBlowupCap;
};

int cmd_verify(const VerifyArgs &a) {
  SweepConfig cfg;
  cfg.suite = a.suite;
  const int sources = !a.enumerate.empty() + !a.in_path.empty() + !a.gen_specs.empty();
  if (sources != 1)
    throw InvalidInput("verify needs exactly one of --enumerate, --in, --gen");
  if (!a.enumerate.empty())
    cfg.corpus = enumerate_corpus(a.enumerate);
  else if (!a.in_path.empty())
    cfg.corpus = graph6_corpus(a.in_path);
  else
    cfg.corpus = generator_corpus(a.gen_specs);
  if (!a.sigmas.empty())
    cfg.sigmas = parse_rationals(a.sigmas);
  if (!a.rs.empty())
    cfg.rs = a.rs;
  cfg.jobs = a.jobs > 0 ? a.jobs : default_jobs();
  cfg.blowup_cap = a.blowup_cap;
  if (!a.out.empty())
    cfg.out_path = a.out;
  if (!a.checkpoint.empty())
    cfg.checkpoint_path = a.checkpoint;
  if (!a.cert_dir.empty())
    cfg.cert_dir = a.cert_dir;
  if (a.stop_after > 0)
    cfg.stop_after = a.stop_after;
  return run_suite(cfg).exit_code;
}

struct IneqArgs {
  std::string suite;
  int delta_max = 60;
  int n_max = 200;
  int r_max = 20;
  std::string step = "1/4";
  int budget = kDefaultBucketBudget;
  std::string out;
};

int cmd_ineq(const IneqArgs &a) {
  SweepConfig cfg;
  cfg.suite = a.suite;
  cfg.delta_max = a.delta_max;
  cfg.n_max = a.n_max;
  cfg.r_max = a.r_max;
  cfg.step = parse_rational(a.step);
  cfg.budget = a.budget;
  if (!a.out.empty())
    cfg.out_path = a.out;
  return run_suite(cfg).exit_code;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact independence-bound workbench"};
  app.require_subcommand(1);

  std::string family, gen_out;
  std::vector<int> gen_params;
  auto *gen_cmd = app.add_subcommand("gen", "print one generated graph as graph6");
  gen_cmd->add_option("family", family, "cycle, complete, path, turan, bipartite_minus_matching, c5_blowup, "
                                        "c7_blowup, clique_chain, petersen")
      ->required();
  gen_cmd->add_option("params", gen_params, "integer parameters");
  gen_cmd->add_option("--out", gen_out, "write to a file instead of stdout");

  std::string alpha_src;
  auto *alpha_cmd = app.add_subcommand("alpha", "independence number with a witness");
  alpha_cmd->add_option("graph", alpha_src, "graph6 text, or - for graph6 lines on stdin")->required();

  std::string bounds_src, sigma_text, weights_path;
  auto *bounds_cmd = app.add_subcommand("bounds", "degree bounds, LP bound and alpha of one graph");
  bounds_cmd->add_option("graph", bounds_src, "graph6 text, or - for stdin")->required();
  bounds_cmd->add_option("--sigma", sigma_text, "p/q in [0, 1/2]")->required();
  bounds_cmd->add_option("--weights", weights_path, "weight file, one p/q per vertex");

  std::string explore_src;
  auto *explore_cmd = app.add_subcommand("explore", "base cliques with their proof quantities");
  explore_cmd->add_option("graph", explore_src, "graph6 text, or - for stdin")->required();

  VerifyArgs va;
  auto *verify_cmd = app.add_subcommand("verify", "sweep a graph corpus");
  verify_cmd->add_option("suite", va.suite)->required()->check(CLI::IsMember(graph_suites()));
  verify_cmd->add_option("--enumerate", va.enumerate, "all labeled graphs on N or A-B vertices");
  verify_cmd->add_option("--in", va.in_path, "graph6 file");
  verify_cmd->add_option("--gen", va.gen_specs, "generator spec family:p1,p2 (one range a..b allowed)");
  verify_cmd->add_option("--sigma", va.sigmas, "p/q, repeatable");
  verify_cmd->add_option("--r", va.rs, "clique bound, repeatable");
  verify_cmd->add_option("--jobs", va.jobs, "worker count (default: TLAB_JOBS or all cores)");
  verify_cmd->add_option("--checkpoint", va.checkpoint, "resume file; requires --out");
  verify_cmd->add_option("--out", va.out, "JSON lines output file");
  verify_cmd->add_option("--stop-after", va.stop_after, "stop at the first batch boundary past this many graphs");
  verify_cmd->add_option("--cert-dir", va.cert_dir, "write a certificate per COUNTEREXAMPLE");
  verify_cmd->add_option("--blowup-cap", va.blowup_cap, "largest blowup order the conjecture search builds");

  IneqArgs ia;
  auto *ineq_cmd = app.add_subcommand("ineq", "certify an inequality grid");
  ineq_cmd->add_option("suite", ia.suite)->required()->check(CLI::IsMember(inequality_suites()));
  ineq_cmd->add_option("--delta-max", ia.delta_max);
  ineq_cmd->add_option("--n-max", ia.n_max);
  ineq_cmd->add_option("--r-max", ia.r_max);
  ineq_cmd->add_option("--step", ia.step, "p/q");
  ineq_cmd->add_option("--budget", ia.budget, "largest ell*|K| enumerated by brute force");
  ineq_cmd->add_option("--out", ia.out, "JSON lines output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen_cmd)
      return cmd_gen(family, gen_params, gen_out);
    if (*alpha_cmd)
      return cmd_alpha(alpha_src);
    if (*bounds_cmd)
      return cmd_bounds(bounds_src, sigma_text, weights_path);
    if (*explore_cmd)
      return cmd_explore(explore_src);
    if (*verify_cmd)
      return cmd_verify(va);
    return cmd_ineq(ia);
  } catch (const Error &e) {
    std::cerr << "tlab: " << e.what() << "\n";
    return kExitUsage;
  }
}
