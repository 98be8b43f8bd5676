#include <gtest/gtest.h>

#include <random>

#include "hsparse/aux_graph.hpp"
#include "hsparse/errors.hpp"
#include "hsparse/pipeline.hpp"
#include "hsparse/verify.hpp"
#include "test_support.hpp"

namespace hsparse {
namespace {

using V = std::vector<Vertex>;

bool passes(const Instance& inst, const SparsifierOutput& out, std::size_t c) {
  return verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, c).passed;
}

// Every sparsifier edge is the image of the input edge it claims.
void expect_provenance(const Hypergraph& g, const SparsifierOutput& out) {
  ASSERT_EQ(out.kept_edges.size(), out.sparsifier.num_edges());
  for (EdgeId f = 0; f < out.sparsifier.num_edges(); ++f) {
    VertexSet image = out.projection.apply(g.edge(out.kept_edges[f]));
    VertexSet edge(out.sparsifier.edge(f).begin(), out.sparsifier.edge(f).end());
    EXPECT_EQ(image, edge);
  }
}

VertexSet random_side(std::mt19937_64& rng, std::size_t n) {
  VertexSet side;
  while (side.empty() || side.size() == n) side = testing::random_subset(rng, n);
  return side;
}

PhiSparsifyOptions phi_options(std::size_t c) {
  PhiSparsifyOptions o;
  o.c = c;
  o.phi_inv = Rational::integer(64);
  return o;
}

PipelineConfig fast_config(std::size_t c) {
  PipelineConfig cfg;
  cfg.c = c;
  return cfg;
}

TEST(Outputs, IdentityAndCompose) {
  Instance inst = path_instance(4);
  SparsifierOutput id = identity_output(inst.graph, inst.terminals);
  EXPECT_EQ(id.sparsifier, inst.graph);
  EXPECT_EQ(id.kept_edges, (EdgeSet{0, 1, 2}));
  SparsifierOutput a = contraction_output(inst.graph, inst.terminals, EdgeSet{0});
  SparsifierOutput b = contraction_output(a.sparsifier, a.terminals, EdgeSet{1});
  SparsifierOutput ab = compose_outputs(a, b);
  SparsifierOutput direct = contraction_output(inst.graph, inst.terminals, EdgeSet{0, 2});
  EXPECT_EQ(ab.sparsifier, direct.sparsifier);
  EXPECT_EQ(ab.projection, direct.projection);
  EXPECT_EQ(ab.kept_edges, (EdgeSet{1}));
  EXPECT_EQ(ab.terminals, direct.terminals);
}

TEST(Divide, NoCrossingEdges) {
  Hypergraph g(4, {{0, 1}, {2, 3}});
  Divided d = divide(g, TerminalSet({0, 3}), V{0, 1}, V{2, 3});
  EXPECT_EQ(d.side1.graph, Hypergraph(2, {{0, 1}}));
  EXPECT_EQ(d.side2.graph, Hypergraph(2, {{0, 1}}));
  EXPECT_TRUE(d.separation.separated.empty());
  EXPECT_EQ(d.side1.terminals.terminals, (VertexSet{0}));
  EXPECT_EQ(d.side2.terminals.terminals, (VertexSet{1}));
}

TEST(Divide, PathGainsAnchoredEdges) {
  Instance inst = path_instance(4);
  Divided d = divide(inst.graph, inst.terminals, V{0, 1}, V{2, 3});
  EXPECT_EQ(d.side1.graph, Hypergraph(4, {{0, 1}, {1, 2, 3}}));
  EXPECT_EQ(d.side2.graph, Hypergraph(4, {{0, 2, 3}, {0, 1}}));
  EXPECT_EQ(d.side1.terminals.terminals, (VertexSet{0, 2, 3}));
  EXPECT_EQ(d.side1.terminals.anchors, (VertexSet{2, 3}));
  EXPECT_EQ(d.separation.separated.size(), 1u);
}

TEST(Divide, AllEdgesCrossing) {
  Hypergraph g(4, {{0, 2}, {1, 3}, {0, 1, 2, 3}});
  Divided d = divide(g, TerminalSet({0, 2}), V{0, 1}, V{2, 3});
  for (char h : d.side1.is_half) EXPECT_TRUE(h);
  for (char h : d.side2.is_half) EXPECT_TRUE(h);
}

TEST(Divide, RejectsNonPartition) {
  Instance inst = path_instance(4);
  EXPECT_THROW(divide(inst.graph, inst.terminals, V{0, 1}, V{1, 2, 3}), InputError);
  EXPECT_THROW(divide(inst.graph, inst.terminals, V{0, 1}, V{2}), InputError);
  EXPECT_THROW(divide(inst.graph, inst.terminals, V{}, V{0, 1, 2, 3}), InputError);
}

TEST(Combine, IdentityConquerRoundTrips) {
  Instance inst = path_instance(4);
  Divided d = divide(inst.graph, inst.terminals, V{0, 1}, V{2, 3});
  SparsifierOutput out = combine(inst.graph, inst.terminals, d, identity_output(d.side1.graph, d.side1.terminals),
                                 identity_output(d.side2.graph, d.side2.terminals));
  EXPECT_EQ(out.sparsifier, inst.graph);
  EXPECT_EQ(out.projection, ProjectionMap::identity(4));
  EXPECT_EQ(out.kept_edges, (EdgeSet{0, 1, 2}));
  EXPECT_EQ(mincut_value(out.sparsifier, V{0}, V{3}, 2), CutValue::exact(1));
}

TEST(Combine, RejectsMismatchedOutputs) {
  Instance inst = path_instance(4);
  Divided d = divide(inst.graph, inst.terminals, V{0, 1}, V{2, 3});
  SparsifierOutput wrong = identity_output(inst.graph, inst.terminals);
  EXPECT_THROW(combine(inst.graph, inst.terminals, d, wrong, identity_output(d.side2.graph, d.side2.terminals)),
               InternalError);
}

class DivideProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DivideProperty, IdentityConquerIsSound) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 20; ++round) {
    Instance inst = testing::small_instance(GetParam() * 100 + round, 9, 14, 4, 5);
    VertexSet v1 = random_side(rng, inst.graph.num_vertices());
    Divided d = divide(inst.graph, inst.terminals, v1, complement(v1, inst.graph.num_vertices()));
    SparsifierOutput out = combine(inst.graph, inst.terminals, d, identity_output(d.side1.graph, d.side1.terminals),
                                   identity_output(d.side2.graph, d.side2.terminals));
    EXPECT_EQ(out.sparsifier, inst.graph);
    EXPECT_TRUE(passes(inst, out, 3));
  }
}

TEST_P(DivideProperty, PhiSparsifyConquerIsSound) {
  std::mt19937_64 rng(GetParam() + 1);
  for (int round = 0; round < 20; ++round) {
    Instance inst = testing::small_instance(GetParam() * 100 + round, 9, 14, 4, 5);
    const std::size_t c = 1 + rng() % 3;
    VertexSet v1 = random_side(rng, inst.graph.num_vertices());
    Divided d = divide(inst.graph, inst.terminals, v1, complement(v1, inst.graph.num_vertices()));
    SparsifierOutput o1 = phi_sparsify(d.side1.graph, d.side1.terminals, phi_options(c));
    SparsifierOutput o2 = phi_sparsify(d.side2.graph, d.side2.terminals, phi_options(c));
    SparsifierOutput out = combine(inst.graph, inst.terminals, d, o1, o2);
    expect_provenance(inst.graph, out);
    EXPECT_TRUE(passes(inst, out, c)) << "seed " << GetParam() * 100 + round;
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DivideProperty, ::testing::Range<std::uint64_t>(0, 5));

TEST(PhiSparsify, CounterexampleKeepsOnlyEssentialEdges) {
  std::map<std::string, EdgeId> name;
  Instance inst = pruning_counterexample(&name);
  SparsifierOutput out = phi_sparsify(inst.graph, inst.terminals, phi_options(2));
  EXPECT_EQ(out.kept_edges, (EdgeSet{name["a"], name["b"]}));
  EXPECT_TRUE(passes(inst, out, 2));
}

TEST(PhiSparsify, SingleEdgeIsKept) {
  Instance inst{Hypergraph(2, {{0, 1}}), TerminalSet({0, 1})};
  SparsifierOutput out = phi_sparsify(inst.graph, inst.terminals, phi_options(1));
  EXPECT_EQ(out.sparsifier, inst.graph);
  EXPECT_EQ(out.projection, ProjectionMap::identity(2));
}

TEST(PhiSparsify, FewTerminalsCollapse) {
  Instance inst = path_instance(5);
  SparsifierOutput out = phi_sparsify(inst.graph, TerminalSet({2}), phi_options(1));
  EXPECT_EQ(out.sparsifier.num_vertices(), 1u);
  EXPECT_EQ(out.sparsifier.num_edges(), 0u);
}

TEST(PhiSparsify, DisconnectedGraph) {
  Hypergraph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {3, 5}});
  Instance inst{g, TerminalSet({0, 2, 3, 5})};
  SparsifierOutput out = phi_sparsify(g, inst.terminals, phi_options(2));
  EXPECT_TRUE(passes(inst, out, 2));
  EXPECT_EQ(out.sparsifier.num_edges(), 3u);
}

TEST(PhiSparsify, CanKeepMoreThanEssentialEdges) {
  // Only {0,2} is essential, but value 2 between 0 and 2 needs two edges.
  Instance inst{Hypergraph(3, {{0, 1}, {1, 2}, {0, 2}}), TerminalSet({0, 2})};
  EXPECT_EQ(brute_force_essential(inst.graph, inst.terminals, 2), (EdgeSet{2}));
  SparsifierOutput out = phi_sparsify(inst.graph, inst.terminals, phi_options(2));
  EXPECT_EQ(out.sparsifier.num_edges(), 2u);
  EXPECT_TRUE(passes(inst, out, 2));
}

TEST(PhiSparsify, SafeModeMatches) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = testing::small_instance(seed, 9, 14, 3, 4);
    PhiSparsifyOptions safe = phi_options(2);
    safe.safe_mode = true;
    EXPECT_EQ(phi_sparsify(inst.graph, inst.terminals, safe).kept_edges,
              phi_sparsify(inst.graph, inst.terminals, phi_options(2)).kept_edges);
  }
}

class PhiProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PhiProperty, SoundAndMinimal) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 20; ++round) {
    Instance inst = testing::small_instance(GetParam() * 100 + round, 10, 16, 4, 5);
    const std::size_t c = 1 + rng() % 3;
    SparsifierOutput out = phi_sparsify(inst.graph, inst.terminals, phi_options(c));
    expect_provenance(inst.graph, out);
    EXPECT_TRUE(passes(inst, out, c)) << "seed " << GetParam() * 100 + round << " c " << c;
    // Essential edges survive, and nothing contractible is left behind.
    EdgeSet ess = brute_force_essential(inst.graph, inst.terminals, c);
    EXPECT_TRUE(std::includes(out.kept_edges.begin(), out.kept_edges.end(), ess.begin(), ess.end()));
    EXPECT_EQ(brute_force_essential(out.sparsifier, out.terminals, c).size(), out.sparsifier.num_edges());
  }
}

TEST_P(PhiProperty, CoreIsNeverSplit) {
  std::mt19937_64 rng(GetParam() + 5);
  for (int round = 0; round < 20; ++round) {
    Instance inst = testing::small_instance(GetParam() * 100 + round, 10, 20, 4, 2);
    const std::size_t c = 1 + rng() % 3;
    PhiSparsifyOptions o = phi_options(c);
    o.exhaustive_limit = 0;
    CutPlan plan = plan_enumeration(inst.graph, o);
    EXPECT_EQ(plan.mode, BudgetMode::core);
    if (plan.core.empty()) continue;
    const std::size_t n = inst.graph.num_vertices();
    for (std::uint32_t x = 1; x + 1 < (1u << n); ++x) {
      VertexSet side;
      for (Vertex v = 0; v < n; ++v)
        if (x >> v & 1) side.push_back(v);
      if (boundary(inst.graph, side).size() > c) continue;
      std::size_t inside = 0;
      for (Vertex v : plan.core) inside += x >> v & 1;
      EXPECT_TRUE(inside == 0 || inside == plan.core.size());
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PhiProperty, ::testing::Range<std::uint64_t>(0, 5));

TEST(RoundPhiInv, FormulaAndCap) {
  PipelineConfig cfg = fast_config(1);
  EXPECT_EQ(round_phi_inv(cfg, 8, 2), Rational::integer(4 * 2 * 27));
  EXPECT_EQ(round_phi_inv(cfg, 1, 3), Rational::integer(12));
  cfg.c = 2;
  EXPECT_EQ(round_phi_inv(cfg, 1024, 3), Rational::integer(4096));
  cfg.phi_inv_cap = Rational::infinity();
  EXPECT_EQ(round_phi_inv(cfg, 1024, 3), Rational::integer(4 * 3 * 16 * 1000));
}

TEST(SparsifyFast, RejectsZeroThreshold) {
  Instance inst = path_instance(3);
  EXPECT_THROW(sparsify_fast(inst.graph, inst.terminals, fast_config(0)), InputError);
}

TEST(SparsifyFast, PathCollapsesToOneEdge) {
  for (std::size_t n : {20u, 40u, 80u}) {
    Instance inst = path_instance(n);
    SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, fast_config(1));
    EXPECT_EQ(out.sparsifier.num_edges(), 1u);
    EXPECT_EQ(out.sparsifier.num_vertices(), 2u);
    EXPECT_TRUE(passes(inst, out, 1));
  }
}

TEST(SparsifyFast, SizeIndependentOfN) {
  std::vector<std::size_t> sizes;
  for (std::size_t n : {20u, 40u, 80u}) {
    Instance inst = pendant_terminal_family(n, 3);
    SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, fast_config(2));
    sizes.push_back(out.sparsifier.num_edges());
    EXPECT_TRUE(verify_sparsifier(inst.graph, inst.terminals, out.sparsifier, out.projection, 2).passed);
  }
  EXPECT_EQ(sizes[0], sizes[1]);
  EXPECT_EQ(sizes[1], sizes[2]);
}

TEST(SparsifyFast, TwoClustersSplitIntoParts) {
  Instance inst = two_cluster_instance(7, 3, 2, 11);
  PipelineConfig cfg = fast_config(2);
  cfg.phi_inv_cap = Rational::integer(3);
  SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
  ASSERT_FALSE(out.stats.rounds.empty());
  EXPECT_GT(out.stats.rounds.front().parts, 1u);
  EXPECT_TRUE(passes(inst, out, 2));
  expect_provenance(inst.graph, out);
}

TEST(SparsifyFast, Deterministic) {
  Instance inst = testing::small_instance(31, 10, 16, 4, 5);
  SparsifierOutput a = sparsify_fast(inst.graph, inst.terminals, fast_config(2));
  SparsifierOutput b = sparsify_fast(inst.graph, inst.terminals, fast_config(2));
  EXPECT_EQ(a.sparsifier, b.sparsifier);
  EXPECT_EQ(a.projection, b.projection);
  EXPECT_EQ(a.kept_edges, b.kept_edges);
}

class FastProperty : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FastProperty, SoundOnRandomInstances) {
  std::mt19937_64 rng(GetParam());
  for (int round = 0; round < 15; ++round) {
    Instance inst = testing::small_instance(GetParam() * 100 + round, 10, 16, 4, 5);
    const std::size_t c = 1 + rng() % 3;
    PipelineConfig cfg = fast_config(c);
    // Small caps force real decompositions with several parts.
    cfg.phi_inv_cap = Rational::integer(1 + rng() % 4);
    SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
    expect_provenance(inst.graph, out);
    EXPECT_TRUE(passes(inst, out, c)) << "seed " << GetParam() * 100 + round << " c " << c;
    EdgeSet ess = brute_force_essential(inst.graph, inst.terminals, c);
    EXPECT_TRUE(std::includes(out.kept_edges.begin(), out.kept_edges.end(), ess.begin(), ess.end()));
    EXPECT_EQ(out.terminals.terminals, out.projection.apply(inst.terminals.terminals));
  }
}

TEST_P(FastProperty, StepwiseVerificationMatchesComposed) {
  Instance inst = testing::small_instance(GetParam() + 500, 10, 16, 4, 5);
  PipelineConfig cfg = fast_config(2);
  cfg.phi_inv_cap = Rational::integer(2);
  SparsifierOutput r1 = sparsify_round(inst.graph, inst.terminals, cfg);
  SparsifierOutput r2 = sparsify_round(r1.sparsifier, r1.terminals, cfg);
  SparsifierOutput both = compose_outputs(r1, r2);
  Instance mid{r1.sparsifier, r1.terminals};
  bool stepwise = passes(inst, r1, 2) && passes(mid, r2, 2);
  EXPECT_EQ(stepwise, passes(inst, both, 2));
  EXPECT_TRUE(stepwise);
}

INSTANTIATE_TEST_SUITE_P(Seeds, FastProperty, ::testing::Range<std::uint64_t>(0, 6));

TEST(SparsifyFast, RoundsShrinkGeometrically) {
  // m_{i+1} <= K |T| c^3 + m_i / 2 with a measured K.
  const double k_const = 1.0;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    Instance inst = two_cluster_instance(8, 2, 2, seed);
    const std::size_t c = 2;
    PipelineConfig cfg = fast_config(c);
    cfg.phi_inv_cap = Rational::integer(4);
    SparsifierOutput out = sparsify_fast(inst.graph, inst.terminals, cfg);
    for (const RoundStats& r : out.stats.rounds) {
      double bound = k_const * static_cast<double>(inst.terminals.size() * c * c * c) +
                     static_cast<double>(r.edges_before) / 2.0;
      EXPECT_LE(static_cast<double>(r.edges_after), bound);
    }
  }
}

}  // namespace
}  // namespace hsparse
