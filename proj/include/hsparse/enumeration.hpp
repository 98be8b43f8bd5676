#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "hsparse/flow.hpp"
#include "hsparse/hypergraph.hpp"
#include "hsparse/rational.hpp"

namespace hsparse {

// Which (edge, vertex) pairs a stalled search may trim.
enum class TrimPolicy {
  // Only the pair through which a vertex was first reached, scanned in discovery
  // order; vertices reached before the trimmed one are kept on the seed side.
  discovery,
  // Every visited edge with every non-seed vertex on it, with memoized trim sets.
  literal,
};

struct EnumerationParams {
  std::size_t c = 1;
  Rational phi_inv = Rational::integer(1);
  std::size_t r = 2;
  std::size_t budget = 1;     // max |E(X)| on the emitted side
  std::size_t max_depth = 2;  // r * c
  TrimPolicy policy = TrimPolicy::discovery;

  // budget = max(1, floor(c * phi_inv)).
  static EnumerationParams from_phi_inv(std::size_t c, Rational phi_inv, std::size_t r);
  // budget = m: every connected side qualifies.
  static EnumerationParams safe(const Hypergraph& g, std::size_t c);
};

// Working-graph edits: vertex v removed from edge e.
using TrimOverlay = std::vector<std::pair<EdgeId, Vertex>>;

struct EnumerationStats {
  std::size_t seeds = 0;
  std::size_t recursion_nodes = 0;
  std::size_t max_nodes_per_seed = 0;
};

// Connected cuts: the side X with |E(X)| <= |E(V\X)| induces a connected subgraph,
// |boundary| <= c and |E(X)| <= budget. Sorted by side, deduplicated.
std::vector<Cut> enumerate_connected_cuts(const Hypergraph& g, const EnumerationParams& params,
                                          EnumerationStats* stats = nullptr);

// Every side X found from the given seeds: G[X] connected, X != V, |boundary| <= c.
// No small-side filter.
std::vector<Cut> enumerate_cut_sides(const Hypergraph& g, const EnumerationParams& params,
                                     std::span<const Vertex> seeds, EnumerationStats* stats = nullptr);

// Guess-and-trim search from one seed, starting at `depth` with `start` already trimmed.
std::vector<Cut> enumerate_cuts_from_seed(const Hypergraph& g, const EnumerationParams& params, Vertex seed,
                                          const TrimOverlay& start = {}, std::size_t depth = 0,
                                          EnumerationStats* stats = nullptr);

bool is_small_side(const Hypergraph& g, std::span<const Vertex> x);

std::vector<Cut> brute_force_connected_cuts(const Hypergraph& g, std::size_t c, const OracleLimits& limits = {});

}  // namespace hsparse
