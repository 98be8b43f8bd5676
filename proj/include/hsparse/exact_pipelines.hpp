#pragma once

#include <cstddef>
#include <optional>

#include "hsparse/flow.hpp"
#include "hsparse/hypergraph.hpp"
#include "hsparse/pipeline.hpp"
#include "hsparse/rational.hpp"

namespace hsparse {

// Limits for the exhaustive pipelines; subproblems grow by their anchors.
struct ExactLimits {
  std::size_t max_vertices = 20;
  std::size_t max_terminals = 16;
  std::size_t max_depth = 64;
};

// Contracts non-essential edges one at a time until every edge is essential.
SparsifierOutput essential_base_case(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                     const ExactLimits& limits = {});

// Needs degree-one terminals. Splits on any cut of value <= c with >= 5c terminals
// on both sides, else runs the base case. Throws LimitError beyond the limits.
SparsifierOutput sparsify_slow(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                               const ExactLimits& limits = {});
// Any terminals: degree reduction, sparsify_slow, then the pendant copies are removed.
SparsifierOutput sparsify_slow_general(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                       const ExactLimits& limits = {});

struct TerminalExpansion {
  Rational value = Rational::infinity();
  VertexSet witness;
};
// min |boundary(X)| / min(|X cap T|, |T \ X|) over X with terminals on both sides.
// Throws InputError for |T| < 2 and LimitError beyond the vertex limit.
TerminalExpansion terminal_expansion(const Hypergraph& g, const TerminalSet& terminals,
                                     const OracleLimits& limits = {});

struct Unbreakability {
  bool unbreakable = true;
  std::optional<VertexSet> witness;  // side of a violating bipartition
};
// True iff no cut of value <= c leaves >= d terminals on both sides.
Unbreakability is_edge_unbreakable(const Hypergraph& g, const TerminalSet& terminals, std::size_t d, std::size_t c,
                                   const OracleLimits& limits = {});

// phi = 1 / (4 log2 |T|) fixed at the top level; splits on terminal-expansion
// witnesses below 2 phi, base case otherwise.
SparsifierOutput polytime_sparsify(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                   const ExactLimits& limits = {});

}  // namespace hsparse
