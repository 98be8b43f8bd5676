#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hsparse/aux_graph.hpp"
#include "hsparse/flow.hpp"
#include "hsparse/hypergraph.hpp"
#include "hsparse/rational.hpp"

namespace hsparse {

struct RoundStats {
  std::size_t edges_before = 0;
  std::size_t edges_after = 0;
  std::size_t parts = 0;
  std::size_t certified_parts = 0;
  std::size_t crossing_edges = 0;
  std::size_t cuts = 0;
  std::size_t recursion_nodes = 0;
  Rational phi_inv;
  double seconds = 0;
};

struct SparsifierStats {
  std::vector<RoundStats> rounds;
  std::size_t cuts = 0;             // enumerated cut sides, summed over calls
  std::size_t recursion_nodes = 0;  // enumeration search nodes
  std::size_t partitions = 0;       // live aux partitions at build time
  std::size_t phi_calls = 0;
  std::size_t safe_calls = 0;       // calls that enumerated with budget = m
  std::size_t base_cases = 0;       // slow / poly pipelines
  std::size_t splits = 0;
  std::vector<long long> potentials;  // |T'| - 5c on entry to each slow call
  double seconds = 0;
};

struct SparsifierOutput {
  Hypergraph sparsifier;
  ProjectionMap projection;  // input vertices -> sparsifier vertices
  EdgeSet kept_edges;        // per sparsifier edge, the input edge it is the image of
  TerminalSet terminals;     // images of the input terminals
  SparsifierStats stats;
};

// H = G, identity projection.
SparsifierOutput identity_output(const Hypergraph& g, const TerminalSet& terminals);
// Output of contracting `edges` in g.
SparsifierOutput contraction_output(const Hypergraph& g, const TerminalSet& terminals, const EdgeSet& edges);
// Applies `next`, computed on `first.sparsifier`, after `first`.
SparsifierOutput compose_outputs(const SparsifierOutput& first, const SparsifierOutput& next);

struct Divided {
  AnchoredSubgraph side1;
  AnchoredSubgraph side2;
  SeparationResult separation;
};
// Throws InputError unless (v1, v2) partitions the vertices into nonempty sides.
Divided divide(const Hypergraph& g, const TerminalSet& terminals, std::span<const Vertex> v1,
               std::span<const Vertex> v2);
// Glues sparsifiers of both sides back into one for g. Throws InternalError on
// inconsistent anchor bookkeeping.
SparsifierOutput combine(const Hypergraph& g, const TerminalSet& terminals, const Divided& divided,
                         const SparsifierOutput& out1, const SparsifierOutput& out2);

enum class BudgetMode { safe, core, expander, conductance };
std::string to_string(BudgetMode mode);

struct PhiSparsifyOptions {
  std::size_t c = 1;
  Rational phi_inv = Rational::integer(1);
  bool certified = false;  // caller guarantees conductance >= 1 / phi_inv
  bool safe_mode = false;
  std::size_t exhaustive_limit = 14;  // exact conductance for parts up to this size
};

struct CutPlan {
  BudgetMode mode = BudgetMode::safe;
  std::size_t budget = 0;
  VertexSet seeds;
  VertexSet core;  // vertices no cut of value <= c separates, in core mode
};
// Budget and seeds so that every cut of a useful partition is found from one side.
CutPlan plan_enumeration(const Hypergraph& g, const PhiSparsifyOptions& options);

// Edge ids (of g) that phi_sparsify contracts on a connected g.
EdgeSet phi_sparsify_contraction_set(const Hypergraph& g, const TerminalSet& terminals,
                                     const PhiSparsifyOptions& options, SparsifierStats* stats = nullptr);
// Handles each component separately.
SparsifierOutput phi_sparsify(const Hypergraph& g, const TerminalSet& terminals, const PhiSparsifyOptions& options);

struct PipelineConfig {
  std::size_t c = 1;
  std::uint64_t c_prime = 1;
  std::size_t max_iters = 0;  // 0: ceil(log2 m)
  std::size_t c_exponent = 4;
  std::size_t log_exponent = 3;
  Rational phi_inv_cap = Rational::integer(4096);
  OracleLimits limits;
  bool safe_mode = false;
  std::uint64_t seed = 1;
  std::size_t exhaustive_limit = 14;
};

// 4 C' r c^a ceil(log2 n)^b, capped.
Rational round_phi_inv(const PipelineConfig& config, std::size_t n, std::size_t rank);

// One round: decompose, peel the parts, sparsify each, combine.
SparsifierOutput sparsify_round(const Hypergraph& g, const TerminalSet& terminals, const PipelineConfig& config,
                                RoundStats* round = nullptr);
SparsifierOutput sparsify_fast(const Hypergraph& g, const TerminalSet& terminals, const PipelineConfig& config);

}  // namespace hsparse
