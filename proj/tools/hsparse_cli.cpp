// Command-line front end: sparsify, verify, enumerate-cuts, decompose, stats, generate.
#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "hsparse/decomposition.hpp"
#include "hsparse/enumeration.hpp"
#include "hsparse/errors.hpp"
#include "hsparse/exact_pipelines.hpp"
#include "hsparse/generators.hpp"
#include "hsparse/io.hpp"
#include "hsparse/pipeline.hpp"
#include "hsparse/verify.hpp"

using namespace hsparse;

namespace {

enum Exit { kOk = 0, kFailed = 1, kBadInput = 2, kLimit = 3, kInternal = 4 };

std::string set_text(std::span<const Vertex> xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
  return s + "}";
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text;
  else
    write_text_file(path, text);
}

struct SparsifyArgs {
  std::string input;
  std::size_t c = 1;
  std::string method = "fast";
  std::uint64_t c_prime = 1;
  std::uint64_t seed = 1;
  std::size_t max_iters = 0;
  bool safe_mode = false;
  std::string out, proj, stats;
};

int run_sparsify(const SparsifyArgs& a) {
  Instance inst = read_hypergraph_file(a.input);
  auto start = std::chrono::steady_clock::now();
  SparsifierOutput out;
  if (a.method == "fast") {
    PipelineConfig cfg;
    cfg.c = a.c;
    cfg.c_prime = a.c_prime;
    cfg.seed = a.seed;
    cfg.safe_mode = a.safe_mode;
    cfg.max_iters = a.max_iters;
    out = sparsify_fast(inst.graph, inst.terminals, cfg);
  } else if (a.method == "slow") {
    out = sparsify_slow_general(inst.graph, inst.terminals, a.c);
  } else {
    out = polytime_sparsify(inst.graph, inst.terminals, a.c);
  }
  if (out.stats.seconds == 0)
    out.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  emit(a.out, serialize_hypergraph(out.sparsifier, out.terminals));
  if (!a.proj.empty()) emit(a.proj, serialize_projection(out.projection));
  if (!a.stats.empty()) emit(a.stats, stats_json(out, a.method, a.c, a.seed) + "\n");
  if (!a.out.empty() && a.out != "-")
    std::cout << "sparsifier n=" << out.sparsifier.num_vertices() << " m=" << out.sparsifier.num_edges()
              << " terminals=" << out.terminals.size() << " (input n=" << inst.graph.num_vertices()
              << " m=" << inst.graph.num_edges() << ")\n";
  return kOk;
}

struct VerifyArgs {
  std::string g, h, proj;
  std::size_t c = 1;
  std::string mode = "exhaustive";
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  bool lines = false;
};

int run_verify(const VerifyArgs& a) {
  VerifyOptions opt;
  opt.seed = a.seed;
  opt.threads = a.threads;
  if (a.mode == "exhaustive") {
    opt.mode = VerifyMode::exhaustive;
  } else if (a.mode == "pairs") {
    opt.mode = VerifyMode::disjoint_pairs;
  } else if (a.mode.rfind("sampled", 0) == 0) {
    opt.mode = VerifyMode::sampled;
    if (a.mode.size() > 7) {
      if (a.mode[7] != ':') throw InputError("bad --mode " + a.mode);
      opt.samples = static_cast<std::size_t>(parse_rational(a.mode.substr(8)).floor_times(1));
    }
  } else {
    throw InputError("bad --mode " + a.mode + " (exhaustive, pairs, sampled:N)");
  }
  Instance g = read_hypergraph_file(a.g);
  Instance h = read_hypergraph_file(a.h);
  ProjectionMap proj = read_projection_file(a.proj);
  VerificationReport r = verify_sparsifier(g.graph, g.terminals, h.graph, proj, a.c, opt);
  std::cout << (a.lines ? r.to_lines() : r.to_text());
  return r.passed ? kOk : kFailed;
}

int run_enumerate(const std::string& path, std::size_t c, const std::string& phi_inv, const std::string& dot) {
  Instance inst = read_hypergraph_file(path);
  const Hypergraph& g = inst.graph;
  EnumerationParams params = phi_inv.empty()
                                 ? EnumerationParams::safe(g, c)
                                 : EnumerationParams::from_phi_inv(c, parse_rational(phi_inv), std::max<std::size_t>(2, g.rank()));
  EnumerationStats st;
  std::vector<Cut> cuts = enumerate_connected_cuts(g, params, &st);
  std::cout << "cuts " << cuts.size() << " budget " << params.budget << "\n";
  for (const Cut& cut : cuts)
    std::cout << "cut side=" << set_text(cut.side) << " value=" << cut.value << " boundary=" << set_text(cut.boundary)
              << "\n";
  if (!dot.empty()) emit(dot, aux_graph_dot(build_pruned_auxiliary_graph(g, inst.terminals, cuts, c)));
  return kOk;
}

int run_decompose(const std::string& path, const std::string& phi_text) {
  Instance inst = read_hypergraph_file(path);
  Rational phi = parse_rational(phi_text);
  DecompositionResult d = expander_decompose(inst.graph, phi);
  std::cout << "parts " << d.parts.size() << " crossing " << d.crossing_edges.size() << " phi " << d.phi << "\n";
  for (std::size_t i = 0; i < d.parts.size(); ++i)
    std::cout << "part " << i << " certified=" << (d.certified[i] ? "yes" : "no") << " vertices=" << set_text(d.parts[i])
              << "\n";
  return kOk;
}

int run_stats(const std::string& path) {
  Instance inst = read_hypergraph_file(path);
  const Hypergraph& g = inst.graph;
  std::cout << "n=" << g.num_vertices() << " m=" << g.num_edges() << " r=" << g.rank() << " p=" << g.total_size()
            << " terminals=" << inst.terminals.size() << "\n";
  return kOk;
}

struct GenerateArgs {
  std::string family = "random";
  std::size_t n = 8, m = 10, r = 3, k = 3;
  std::size_t bridges = 1;
  std::uint64_t seed = 1;
  std::string out;
};

int run_generate(const GenerateArgs& a) {
  Instance inst;
  if (a.family == "path") {
    inst = path_instance(a.n);
  } else if (a.family == "counterexample") {
    inst = pruning_counterexample();
  } else if (a.family == "pendant") {
    inst = pendant_terminal_family(a.n, a.seed);
  } else if (a.family == "clusters") {
    inst = two_cluster_instance(a.n, a.k, a.bridges, a.seed);
  } else if (a.family == "large") {
    inst = large_random_instance(a.n, a.m, a.r, a.k, a.seed);
  } else {
    RandomShape shape;
    shape.n = a.n;
    shape.m = a.m;
    shape.max_rank = a.r;
    shape.terminals = a.k;
    inst = random_instance(shape, a.seed);
  }
  emit(a.out, serialize_hypergraph(inst.graph, inst.terminals));
  return kOk;
}

const CLI::Range kThreshold(std::size_t{1}, std::size_t{1} << 20, "THRESHOLD >= 1");

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Contraction-based vertex sparsifiers for hypergraph cuts"};
  app.require_subcommand(1);

  SparsifyArgs sa;
  auto* sparsify = app.add_subcommand("sparsify", "Compute a contraction-based sparsifier");
  sparsify->add_option("input", sa.input, "Hypergraph file")->required();
  sparsify->add_option("--c", sa.c, "Cut threshold (>= 1)")->required()->check(kThreshold);
  sparsify->add_option("--method", sa.method, "fast, slow or poly")->check(CLI::IsMember({"fast", "slow", "poly"}));
  sparsify->add_option("--cprime", sa.c_prime, "Constant in the round parameter")->check(CLI::PositiveNumber);
  sparsify->add_option("--seed", sa.seed, "Random seed");
  sparsify->add_option("--max-iters", sa.max_iters, "Round limit (0: ceil log2 m)");
  sparsify->add_flag("--safe-mode", sa.safe_mode, "Enumerate every connected cut");
  sparsify->add_option("--out", sa.out, "Sparsifier output (default stdout)");
  sparsify->add_option("--proj", sa.proj, "Projection output");
  sparsify->add_option("--stats", sa.stats, "JSON stats output");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a sparsifier against the input");
  verify->add_option("graph", va.g, "Input hypergraph")->required();
  verify->add_option("sparsifier", va.h, "Sparsifier hypergraph")->required();
  verify->add_option("projection", va.proj, "Projection file")->required();
  verify->add_option("--c", va.c, "Cut threshold")->required()->check(kThreshold);
  verify->add_option("--mode", va.mode, "exhaustive, pairs or sampled:N");
  verify->add_option("--seed", va.seed, "Sampling seed");
  verify->add_option("--threads", va.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--lines", va.lines, "Machine-readable report");

  std::string e_path, e_phi_inv, e_dot;
  std::size_t e_c = 1;
  auto* enumerate = app.add_subcommand("enumerate-cuts", "List connected cuts of small value");
  enumerate->add_option("graph", e_path, "Hypergraph file")->required();
  enumerate->add_option("--c", e_c, "Cut threshold")->required()->check(kThreshold);
  enumerate->add_option("--phi-inv", e_phi_inv, "Inverse conductance (default: no budget)");
  enumerate->add_option("--dot", e_dot, "Write the pruned auxiliary graph as DOT");

  std::string d_path, d_phi = "1";
  auto* decompose = app.add_subcommand("decompose", "Expander decomposition");
  decompose->add_option("graph", d_path, "Hypergraph file")->required();
  decompose->add_option("--phi", d_phi, "Conductance target in (0, 1]");

  std::string s_path;
  auto* stats = app.add_subcommand("stats", "Print n m r p and the terminal count");
  stats->add_option("graph", s_path, "Hypergraph file")->required();

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Write a test instance");
  generate->add_option("family", ga.family, "path, counterexample, random, pendant, clusters or large")
      ->check(CLI::IsMember({"path", "counterexample", "random", "pendant", "clusters", "large"}));
  generate->add_option("--n", ga.n, "Vertices (cluster size for clusters)");
  generate->add_option("--m", ga.m, "Edges");
  generate->add_option("--r", ga.r, "Rank");
  generate->add_option("--k", ga.k, "Terminals (per side for clusters)");
  generate->add_option("--bridges", ga.bridges, "Bridges between clusters");
  generate->add_option("--seed", ga.seed, "Random seed");
  generate->add_option("--out", ga.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*sparsify) return run_sparsify(sa);
    if (*verify) return run_verify(va);
    if (*enumerate) return run_enumerate(e_path, e_c, e_phi_inv, e_dot);
    if (*decompose) return run_decompose(d_path, d_phi);
    if (*stats) return run_stats(s_path);
    if (*generate) return run_generate(ga);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kBadInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
