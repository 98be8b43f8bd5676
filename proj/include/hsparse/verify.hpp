#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hsparse/flow.hpp"
#include "hsparse/hypergraph.hpp"

namespace hsparse {

enum class VerifyMode {
  exhaustive,      // every terminal bipartition
  disjoint_pairs,  // every pair of disjoint nonempty terminal sets
  sampled,         // singletons against the rest, then random disjoint pairs
};

struct VerifyOptions {
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  std::size_t threads = 1;
  OracleLimits limits;
  std::size_t max_pair_terminals = 10;
  std::size_t max_failures = 16;  // failures kept in the report
};

struct VerificationFailure {
  VertexSet t1;
  VertexSet t2;
  std::size_t value_g = 0;
  std::size_t value_h = 0;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::exhaustive;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::size_t checked = 0;
  std::size_t failed = 0;  // may exceed failures.size()
  std::vector<VerificationFailure> failures;
  bool passed = true;

  std::string to_text() const;
  std::string to_lines() const;
};

std::string to_string(VerifyMode mode);

// min(c, mincut) in G between t1 and t2 against the same in H between their images.
// Overlapping images count as c. Throws InputError for an invalid projection or
// terminal set, LimitError when an exhaustive mode exceeds its terminal limit.
VerificationReport verify_sparsifier(const Hypergraph& g, const TerminalSet& terminals, const Hypergraph& h,
                                     const ProjectionMap& projection, std::size_t c,
                                     const VerifyOptions& options = {});

}  // namespace hsparse
