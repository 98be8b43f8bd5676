#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hsparse/flow.hpp"
#include "hsparse/hypergraph.hpp"

namespace hsparse {

// Terminal bipartition stored by the side that holds the smallest terminal.
struct TerminalPartition {
  VertexSet side_a;
  friend bool operator==(const TerminalPartition&, const TerminalPartition&) = default;
  friend auto operator<=>(const TerminalPartition&, const TerminalPartition&) = default;
};

// Throws InputError for trivial partitions or non-terminals.
TerminalPartition canonical_partition(const TerminalSet& terminals, std::span<const Vertex> a);
VertexSet other_side(const TerminalSet& terminals, const TerminalPartition& p);

struct Usefulness {
  bool useful = false;
  std::optional<Cut> witness;  // the A-minimal mincut when its value is <= c
};

// Oriented test: the A-minimal (A, T\A)-mincut exists within c and is connected.
Usefulness is_useful_partition(const Hypergraph& g, std::span<const Vertex> a, const TerminalSet& terminals,
                               std::size_t c);
Usefulness is_useful_partition(FlowEngine& engine, std::span<const Vertex> a, const TerminalSet& terminals,
                               std::size_t c);

enum class AuxPruning {
  none,       // every induced partition kept, E0 = E
  two_sided,  // keep p only if useful from both sides
};

// Tripartite graph over partitions, cuts and hyperedges of one fixed hypergraph.
// Edge ids always refer to that hypergraph; contraction only deactivates nodes.
struct AuxGraph {
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<TerminalPartition> partitions;
  std::vector<std::size_t> mincut_value;
  std::vector<char> partition_alive;
  std::vector<std::vector<std::size_t>> partition_cuts;

  std::vector<Cut> cuts;
  std::vector<std::size_t> cut_partition;  // kNone when the cut is no partition's mincut
  std::vector<char> cut_alive;

  std::vector<std::vector<std::size_t>> edge_cuts;  // per hyperedge id
  EdgeSet registry;                                 // E \ E0 at build time

  std::size_t num_edges() const { return edge_cuts.size(); }
  bool edge_alive(EdgeId e) const;
  EdgeSet edge_nodes() const;  // current E0
  std::vector<std::size_t> alive_partitions() const;
  std::vector<std::size_t> alive_cuts_of(std::size_t p) const;
  std::vector<std::size_t> alive_cuts_of_edge(EdgeId e) const;
};

// Candidate partitions are the nontrivial (T cap X, T \ X) over `cuts`; sides are
// deduplicated as bipartitions.
AuxGraph build_auxiliary_graph(const Hypergraph& g, const TerminalSet& terminals, const std::vector<Cut>& cuts,
                               std::size_t c, AuxPruning pruning);
AuxGraph build_pruned_auxiliary_graph(const Hypergraph& g, const TerminalSet& terminals,
                                      const std::vector<Cut>& cuts, std::size_t c);

// e is essential iff e is in E0 and every live cut of some live partition contains e.
EdgeSet essential_edges_from_aux(const AuxGraph& aux);

// True when every partition around e keeps a live cut avoiding e.
bool aux_allows_contraction(const AuxGraph& aux, EdgeId e);
// Drops N(e) and then isolated nodes. Throws ContractViolation if e looks essential.
void apply_contraction_to_aux(AuxGraph& aux, EdgeId e);

EdgeSet brute_force_essential(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                              const OracleLimits& limits = {});

}  // namespace hsparse
