#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>

#include "hsparse/hypergraph.hpp"

namespace hsparse {

struct Instance {
  Hypergraph graph;
  TerminalSet terminals;
};

struct RandomShape {
  std::size_t n = 8;
  std::size_t m = 10;
  std::size_t max_rank = 3;
  std::size_t terminals = 3;
  bool connected = true;
};

// Seeded random hypergraph. With `connected`, the first edges form a spanning
// hypertree, so m is raised to what that needs.
Instance random_instance(const RandomShape& shape, std::uint64_t seed);

// Path 0-1-...-(n-1) with the two ends as terminals.
Instance path_instance(std::size_t n);

// The 7-vertex counterexample to the unpruned auxiliary graph. `names` maps
// edge labels (a, b, c0, c1, c2, d, e, f1..f4, g) to edge ids.
Instance pruning_counterexample(std::map<std::string, EdgeId>* names = nullptr);

// Four terminals, each hanging off a random 3-uniform core by two edges.
// Cut structure between terminals does not depend on n.
Instance pendant_terminal_family(std::size_t n, std::uint64_t seed);

// Two dense clusters joined by `bridges` edges, each cluster carrying
// `terminals_per_side` degree-1 terminals.
Instance two_cluster_instance(std::size_t cluster_size, std::size_t terminals_per_side, std::size_t bridges,
                              std::uint64_t seed);

// Random r-uniform hypergraph with k terminals, used for throughput runs.
Instance large_random_instance(std::size_t n, std::size_t m, std::size_t r, std::size_t k, std::uint64_t seed);

}  // namespace hsparse
