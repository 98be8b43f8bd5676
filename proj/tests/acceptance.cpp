// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>

#include "hsparse/aux_graph.hpp"
#include "hsparse/decomposition.hpp"
#include "hsparse/enumeration.hpp"
#include "hsparse/exact_pipelines.hpp"
#include "hsparse/flow.hpp"
#include "hsparse/generators.hpp"
#include "hsparse/pipeline.hpp"
#include "hsparse/verify.hpp"
#include "test_support.hpp"

using namespace hsparse;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

bool sound(const Hypergraph& g, const TerminalSet& t, const SparsifierOutput& out, std::size_t c) {
  return verify_sparsifier(g, t, out.sparsifier, out.projection, c).passed;
}

std::vector<Cut> safe_sides(const Hypergraph& g, std::size_t c) {
  return enumerate_cut_sides(g, EnumerationParams::safe(g, c), complement({}, g.num_vertices()));
}

std::set<VertexSet> side_set(const std::vector<Cut>& cuts) {
  std::set<VertexSet> out;
  for (const Cut& c : cuts) out.insert(c.side);
  return out;
}

VertexSet bipartition_key(VertexSet side, std::size_t n) {
  if (side.front() != 0) side = complement(side, n);
  return side;
}

VertexSet random_side(std::mt19937_64& rng, std::size_t n) {
  VertexSet side;
  while (side.empty() || side.size() == n) side = testing::random_subset(rng, n);
  return side;
}

std::optional<EdgeId> random_non_essential(std::mt19937_64& rng, const Instance& inst, std::size_t c) {
  EdgeSet ess = brute_force_essential(inst.graph, inst.terminals, c);
  EdgeSet pool;
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e)
    if (!std::binary_search(ess.begin(), ess.end(), e)) pool.push_back(e);
  if (pool.empty()) return std::nullopt;
  return pool[rng() % pool.size()];
}

Outcome soundness() {
  Outcome o;
  std::mt19937_64 rng(2024);
  int done = 0, failed = 0;
  std::size_t m_in = 0, m_out = 0;
  auto start = std::chrono::steady_clock::now();
  for (std::uint64_t seed = 1; done < 200; ++seed) {
    Instance inst = testing::small_instance(seed, 10, 16, 4, 5);
    if (inst.graph.num_edges() > 16) continue;
    const std::size_t c = 1 + done % 3;
    PipelineConfig cfg;
    cfg.c = c;
    cfg.seed = rng();
    SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
    VerificationReport r = verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, c);
    failed += !r.passed;
    m_in += inst.graph.num_edges();
    m_out += out.sparsifier.num_edges();
    ++done;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = failed == 0 && secs < 300;
  o.detail = fmt("%d/200 exhaustive passes in %.2f s (limit 300 s), %zu of %zu edges kept", 200 - failed, secs, m_out,
                 m_in);
  return o;
}

Outcome size_independence() {
  Outcome o;
  const std::size_t k = 4, c = 2, bound = 64 * k * c * c * c;
  std::string sizes;
  std::size_t largest = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    std::vector<std::size_t> m;
    for (std::size_t n : {20u, 40u, 80u}) {
      Instance inst = pendant_terminal_family(n, seed);
      PipelineConfig cfg;
      cfg.c = c;
      SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
      m.push_back(out.sparsifier.num_edges());
      largest = std::max(largest, out.sparsifier.num_edges());
      if (inst.graph.rank() > 3 || inst.terminals.size() != k) o.pass = false;
      VerifyOptions vo;
      if (!verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, c, vo).passed) o.pass = false;
    }
    if (m[0] != m[1] || m[1] != m[2]) o.pass = false;
    sizes += fmt("%s%zu/%zu/%zu", seed == 1 ? "" : " ", m[0], m[1], m[2]);
  }
  if (largest > bound) o.pass = false;
  o.detail = "|E_H| at n=20/40/80 per seed: " + sizes + fmt(", max %zu <= %zu", largest, bound);
  return o;
}

Outcome enumeration() {
  Outcome o;
  int expanders = 0, mismatches = 0, unsound = 0, sound_checks = 0;
  auto check_sound = [&](const Hypergraph& g, std::size_t c, Rational phi_inv) {
    std::set<VertexSet> truth = side_set(brute_force_connected_cuts(g, c));
    EnumerationParams p = EnumerationParams::from_phi_inv(c, phi_inv, std::max<std::size_t>(2, g.rank()));
    std::vector<Cut> found = enumerate_connected_cuts(g, p);
    for (const Cut& cut : found)
      if (cut.value > c || cut.boundary != boundary(g, cut.side) || !is_connected(g, cut.side) ||
          !truth.count(cut.side))
        ++unsound;
    ++sound_checks;
    return side_set(found) == truth;
  };
  for (std::uint64_t seed = 1; expanders < 50 && seed < 20000; ++seed) {
    Instance inst = testing::small_instance(seed, 8, 14, 3, 3);
    ConductanceOptions co;
    co.allow_heuristic = false;
    ConductanceResult phi = graph_conductance(inst.graph, co);
    if (!phi.exact || phi.value.is_infinite() || phi.value.num == 0) continue;
    ++expanders;
    for (std::size_t c = 1; c <= 3; ++c) {
      if (!check_sound(inst.graph, c, phi.value.inverse())) ++mismatches;
      check_sound(inst.graph, c, Rational::integer(1));  // budget below what the certificate asks for
    }
  }
  // Non-expanders: disconnected graphs and bridged clusters under small budgets.
  int others = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Instance inst;
    if (seed % 2) {
      RandomShape shape;
      shape.n = 6 + seed % 4;
      shape.m = 3 + seed % 6;
      shape.max_rank = 3;
      shape.terminals = 2;
      shape.connected = false;
      inst = random_instance(shape, seed);
    } else {
      inst = two_cluster_instance(3, 1, 1 + seed % 2, seed);
    }
    ++others;
    for (std::size_t c = 1; c <= 3; ++c) check_sound(inst.graph, c, Rational::integer(1 + seed % 4));
  }
  o.pass = expanders == 50 && mismatches == 0 && unsound == 0;
  o.detail = fmt("%d certified expanders, %d mismatches; %d soundness runs (%d non-expanders), %d unsound cuts",
                 expanders, mismatches, sound_checks, others, unsound);
  return o;
}

Outcome a_minimal() {
  Outcome o;
  std::mt19937_64 rng(4);
  int checked = 0, wrong = 0;
  for (std::uint64_t seed = 1; checked < 100; ++seed) {
    Instance inst = testing::small_instance(seed, 9, 14, 4, 4);
    const Hypergraph& g = inst.graph;
    VertexSet a, b;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto r = rng() % 4;
      if (r == 0) a.push_back(v);
      if (r == 1) b.push_back(v);
    }
    if (a.empty() || b.empty()) continue;
    BruteForceMincut bf = brute_force_mincut(g, a, b);
    VertexSet meet = bf.sides.front();
    for (const VertexSet& s : bf.sides) {
      VertexSet next;
      std::set_intersection(meet.begin(), meet.end(), s.begin(), s.end(), std::back_inserter(next));
      meet = std::move(next);
    }
    auto cut = a_minimal_mincut(g, a, b, g.num_edges());
    ++checked;
    if (!cut || cut->side != meet || cut->value != bf.value) ++wrong;
  }
  o.pass = wrong == 0;
  o.detail = fmt("%d/%d flow sides equal the brute-force intersection", checked - wrong, checked);
  return o;
}

Outcome essential() {
  Outcome o;
  int wrong = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Instance inst = testing::small_instance(seed + 5000, 9, 14, 4, 5);
    const std::size_t c = 1 + seed % 3;
    AuxGraph aux = build_pruned_auxiliary_graph(inst.graph, inst.terminals, safe_sides(inst.graph, c), c);
    if (essential_edges_from_aux(aux) != brute_force_essential(inst.graph, inst.terminals, c)) ++wrong;
  }
  o.pass = wrong == 0;
  o.detail = fmt("%d/100 aux essential sets equal brute force", 100 - wrong);
  return o;
}

Outcome counterexample() {
  Outcome o;
  std::map<std::string, EdgeId> name;
  Instance inst = pruning_counterexample(&name);
  const Hypergraph& g = inst.graph;
  AuxGraph unpruned = build_auxiliary_graph(g, inst.terminals, enumerate_connected_cuts(g, EnumerationParams::safe(g, 2)),
                                            2, AuxPruning::none);
  EdgeSet wrong = essential_edges_from_aux(unpruned);
  bool d_e = std::binary_search(wrong.begin(), wrong.end(), name["d"]) &&
             std::binary_search(wrong.begin(), wrong.end(), name["e"]);
  AuxGraph pruned = build_pruned_auxiliary_graph(g, inst.terminals, safe_sides(g, 2), 2);
  EdgeSet ess = essential_edges_from_aux(pruned);
  EdgeSet probe{name["a"], name["b"], name["d"], name["e"]};
  std::sort(probe.begin(), probe.end());
  EdgeSet meet;
  std::set_intersection(ess.begin(), ess.end(), probe.begin(), probe.end(), std::back_inserter(meet));
  EdgeSet ab{name["a"], name["b"]};
  std::sort(ab.begin(), ab.end());
  o.pass = d_e && meet == ab && brute_force_essential(g, inst.terminals, 2) == ab;
  o.detail = fmt("unpruned marks d,e: %s; pruned essential on {a,b,d,e} is {a,b}: %s", d_e ? "yes" : "no",
                 meet == ab ? "yes" : "no");
  return o;
}

Outcome divide_conquer() {
  Outcome o;
  std::mt19937_64 rng(7);
  int id_ok = 0, phi_ok = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Instance inst = testing::small_instance(seed + 9000, 9, 14, 4, 5);
    const std::size_t c = 1 + rng() % 3;
    VertexSet v1 = random_side(rng, inst.graph.num_vertices());
    Divided d = divide(inst.graph, inst.terminals, v1, complement(v1, inst.graph.num_vertices()));
    if (seed <= 100) {
      SparsifierOutput out = combine(inst.graph, inst.terminals, d, identity_output(d.side1.graph, d.side1.terminals),
                                     identity_output(d.side2.graph, d.side2.terminals));
      id_ok += sound(inst.graph, inst.terminals, out, c);
    } else {
      PhiSparsifyOptions po;
      po.c = c;
      po.phi_inv = Rational::integer(64);
      SparsifierOutput out = combine(inst.graph, inst.terminals, d, phi_sparsify(d.side1.graph, d.side1.terminals, po),
                                     phi_sparsify(d.side2.graph, d.side2.terminals, po));
      phi_ok += sound(inst.graph, inst.terminals, out, c);
    }
  }
  o.pass = id_ok == 100 && phi_ok == 50;
  o.detail = fmt("identity conquer %d/100, phi-sparsify conquer %d/50", id_ok, phi_ok);
  return o;
}

struct Shape {
  std::set<VertexSet> partitions;
  std::set<std::pair<VertexSet, VertexSet>> cuts;
  EdgeSet edges;
  friend bool operator==(const Shape&, const Shape&) = default;
};

Outcome incremental() {
  Outcome o;
  std::mt19937_64 rng(8);
  int pairs = 0, wrong = 0;
  for (std::uint64_t seed = 1; pairs < 100 && seed < 5000; ++seed) {
    Instance inst = testing::small_instance(seed + 13000, 8, 12, 3, 4);
    const Hypergraph& g = inst.graph;
    const std::size_t c = 1 + rng() % 3;
    AuxGraph aux = build_pruned_auxiliary_graph(g, inst.terminals, safe_sides(g, c), c);
    EdgeSet candidates;
    for (EdgeId e : aux.edge_nodes())
      if (aux_allows_contraction(aux, e)) candidates.push_back(e);
    if (candidates.empty()) continue;
    EdgeId e = candidates[rng() % candidates.size()];
    apply_contraction_to_aux(aux, e);
    Contraction con = contract(g, EdgeSet{e}, inst.terminals);
    const Hypergraph& h = con.graph;
    AuxGraph rebuilt = build_pruned_auxiliary_graph(h, con.terminals, safe_sides(h, c), c);

    Shape moved, fresh;
    for (std::size_t p : aux.alive_partitions()) {
      VertexSet a = canonical_partition(con.terminals, con.projection.apply(aux.partitions[p].side_a)).side_a;
      moved.partitions.insert(a);
      for (std::size_t k : aux.alive_cuts_of(p))
        moved.cuts.insert({a, bipartition_key(con.projection.apply(aux.cuts[k].side), h.num_vertices())});
    }
    std::vector<EdgeId> image(g.num_edges(), static_cast<EdgeId>(-1));
    for (EdgeId f = 0; f < h.num_edges(); ++f) image[con.edge_origin[f]] = f;
    for (EdgeId f : aux.edge_nodes()) moved.edges.push_back(image[f]);
    std::sort(moved.edges.begin(), moved.edges.end());
    for (std::size_t p : rebuilt.alive_partitions()) {
      fresh.partitions.insert(rebuilt.partitions[p].side_a);
      for (std::size_t k : rebuilt.alive_cuts_of(p))
        fresh.cuts.insert({rebuilt.partitions[p].side_a, bipartition_key(rebuilt.cuts[k].side, h.num_vertices())});
    }
    fresh.edges = rebuilt.edge_nodes();
    ++pairs;
    wrong += !(moved == fresh);
  }
  o.pass = pairs == 100 && wrong == 0;
  o.detail = fmt("%d/%d incremental contractions equal the rebuild", pairs - wrong, pairs);
  return o;
}

Outcome contraction_invariance() {
  Outcome o;
  std::mt19937_64 rng(9);
  int useful_draws = 0, useful_bad = 0, skipped = 0;
  for (std::uint64_t seed = 1; useful_draws < 200 && seed < 20000; ++seed) {
    Instance inst = testing::small_instance(seed + 17000, 8, 12, 3, 5);
    const std::size_t c = 1 + rng() % 3;
    auto e = random_non_essential(rng, inst, c);
    if (!e) continue;
    const std::size_t k = inst.terminals.size();
    VertexSet a = testing::terminal_subset_by_mask(inst.terminals, 1 + rng() % ((1u << k) - 2));
    VertexSet b = other_side(inst.terminals, TerminalPartition{a});
    Contraction con = contract(inst.graph, EdgeSet{*e}, inst.terminals);
    VertexSet pa = con.projection.apply(a), pb = con.projection.apply(b), both;
    std::set_intersection(pa.begin(), pa.end(), pb.begin(), pb.end(), std::back_inserter(both));
    if (!both.empty()) {
      ++skipped;
      continue;
    }
    ++useful_draws;
    useful_bad += is_useful_partition(inst.graph, a, inst.terminals, c).useful !=
                  is_useful_partition(con.graph, pa, con.terminals, c).useful;
  }
  int persist_draws = 0, persist_bad = 0;
  for (std::uint64_t seed = 1; persist_draws < 200 && seed < 20000; ++seed) {
    Instance inst = testing::small_instance(seed + 23000, 8, 12, 3, 5);
    const std::size_t c = 1 + rng() % 3;
    auto e = random_non_essential(rng, inst, c);
    if (!e) continue;
    Contraction con = contract(inst.graph, EdgeSet{*e}, inst.terminals);
    std::vector<EdgeId> image(inst.graph.num_edges(), static_cast<EdgeId>(-1));
    for (EdgeId f = 0; f < con.graph.num_edges(); ++f) image[con.edge_origin[f]] = f;
    EdgeSet after = brute_force_essential(con.graph, con.terminals, c);
    bool ok = true;
    for (EdgeId f : brute_force_essential(inst.graph, inst.terminals, c))
      ok = ok && image[f] != static_cast<EdgeId>(-1) && std::binary_search(after.begin(), after.end(), image[f]);
    ++persist_draws;
    persist_bad += !ok;
  }
  o.pass = useful_draws == 200 && persist_draws == 200 && useful_bad == 0 && persist_bad == 0;
  o.detail = fmt("usefulness %d draws, %d counterexamples (%d side-merging draws redrawn); persistence %d draws, %d "
                 "counterexamples",
                 useful_draws, useful_bad, skipped, persist_draws, persist_bad);
  return o;
}

// Degree-one terminals on a chain of small random cores; consecutive cores share
// `bridges` edges. `groups` gives the terminal count per core.
Instance pendant_chain(std::uint64_t seed, const std::vector<std::size_t>& groups, std::size_t bridges) {
  std::mt19937_64 rng(seed);
  const std::size_t core = 3;
  std::vector<std::vector<Vertex>> edges;
  std::size_t n = core * groups.size();
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Vertex b = static_cast<Vertex>(core * i);
    edges.push_back({b, b + 1, b + 2});
    edges.push_back({b, b + 1});
    edges.push_back({b + 1, b + 2});
    if (i + 1 < groups.size())
      for (std::size_t j = 0; j < bridges; ++j)
        edges.push_back({static_cast<Vertex>(b + rng() % core), static_cast<Vertex>(b + core + rng() % core)});
  }
  TerminalSet t;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups[i]; ++j) {
      edges.push_back({static_cast<Vertex>(core * i + rng() % core), static_cast<Vertex>(n)});
      t.terminals.push_back(static_cast<Vertex>(n++));
    }
  return {Hypergraph(n, edges), t};
}

Outcome leaf_bound() {
  Outcome o;
  ExactLimits limits;
  limits.max_vertices = 27;
  limits.max_terminals = 20;
  int ok = 0;
  std::size_t splits = 0, leaves = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::size_t c = 1;
    std::vector<std::size_t> groups;
    switch (seed % 3) {
      case 0: groups = {5 + seed % 3, 5 + seed % 2}; break;
      case 1: groups = {5, 5, 5 + seed % 2}; break;
      default:
        c = 2;
        groups = {10, 10};
        break;
    }
    Instance inst = pendant_chain(seed, groups, seed % 3 == 2 ? 2 : 1 + seed % 2);
    const long long k = static_cast<long long>(inst.terminals.size());
    SparsifierOutput out = sparsify_slow(inst.graph, inst.terminals, c, limits);
    long long bound = (k - 5 * static_cast<long long>(c)) / static_cast<long long>(c) + 1;
    splits += out.stats.splits;
    leaves += out.stats.base_cases;
    VerifyOptions vo;
    if (k > 12) {
      vo.mode = VerifyMode::sampled;
      vo.samples = 400;
      vo.seed = seed;
    }
    bool good = static_cast<long long>(out.stats.base_cases) <= bound &&
                verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, c, vo).passed;
    ok += good;
  }
  o.pass = ok == 30;
  o.detail = fmt("%d/30 within (|T|-5c)/c + 1 and sound; %zu splits, %zu leaves in total", ok, splits, leaves);
  return o;
}

struct Timed {
  double seconds;
  SparsifierOutput out;
  VerificationReport report;
};

Timed timed_run(std::size_t m) {
  Instance inst = large_random_instance(10000, m, 3, 50, 1);
  PipelineConfig cfg;
  cfg.c = 2;
  auto start = std::chrono::steady_clock::now();
  SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  VerifyOptions vo;
  vo.mode = VerifyMode::sampled;
  vo.samples = 2000;
  vo.seed = 11;
  VerificationReport r = verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, 2, vo);
  return {secs, std::move(out), std::move(r)};
}

Outcome throughput() {
  Outcome o;
  Timed main_run = timed_run(30000);
  // Sparser companion where terminal cuts fall within c and the output is not trivial.
  Timed sparse = timed_run(12000);
  o.pass = main_run.seconds < 60 && main_run.report.passed && sparse.seconds < 60 && sparse.report.passed;
  o.detail = fmt("m=30000: %.2f s (limit 60 s), H n=%zu m=%zu, %zu sampled checks, %zu failures; "
                 "m=12000: %.2f s, H n=%zu m=%zu, %zu failures",
                 main_run.seconds, main_run.out.sparsifier.num_vertices(), main_run.out.sparsifier.num_edges(),
                 main_run.report.checked, main_run.report.failed, sparse.seconds, sparse.out.sparsifier.num_vertices(),
                 sparse.out.sparsifier.num_edges(), sparse.report.failed);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 sparsifier soundness", soundness},
      {"2 size independent of n", size_independence},
      {"3 cut enumeration on expanders", enumeration},
      {"4 A-minimal mincuts", a_minimal},
      {"5 essential edges from the aux graph", essential},
      {"6 pruning counterexample", counterexample},
      {"7 divide and conquer", divide_conquer},
      {"8 incremental aux maintenance", incremental},
      {"9 contraction invariance", contraction_invariance},
      {"10 slow pipeline leaf bound", leaf_bound},
      {"11 throughput", throughput},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", label.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
