#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hsparse/hypergraph.hpp"
#include "hsparse/rational.hpp"

namespace hsparse {

// |boundary(S)| / min(|E(S)|, |E(V \ S)|), where E(X) are the edges touching X.
// A zero denominator gives infinity. Throws InputError for S empty or S = V.
Rational conductance(const Hypergraph& g, std::span<const Vertex> s);

struct ConductanceOptions {
  std::size_t exhaustive_limit = 16;
  bool allow_heuristic = true;
  std::size_t sweep_seeds = 24;
  std::uint64_t seed = 1;
};

struct ConductanceResult {
  Rational value = Rational::infinity();
  VertexSet witness;  // empty when no proper subset exists
  bool exact = false;
};

// Exact minimum over all proper subsets when n <= exhaustive_limit, else the best
// BFS-prefix sweep (an upper bound, exact = false). Throws LimitError when the
// graph is too large and heuristics are not allowed.
ConductanceResult graph_conductance(const Hypergraph& g, const ConductanceOptions& options = {});

struct DecompositionResult {
  std::vector<VertexSet> parts;
  EdgeSet crossing_edges;
  Rational phi;
  std::vector<char> certified;
};

// Splits along witnesses of conductance below phi until each part is certified or
// the heuristic finds nothing. Throws InputError unless 0 < phi <= 1.
DecompositionResult expander_decompose(const Hypergraph& g, Rational phi, const ConductanceOptions& options = {});

// Edges meeting at least two parts.
EdgeSet crossing_edges_of(const Hypergraph& g, const std::vector<VertexSet>& parts);

}  // namespace hsparse
