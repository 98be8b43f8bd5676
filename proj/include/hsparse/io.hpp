#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hsparse/aux_graph.hpp"
#include "hsparse/generators.hpp"
#include "hsparse/hypergraph.hpp"
#include "hsparse/pipeline.hpp"
#include "hsparse/rational.hpp"

namespace hsparse {

// Hypergraph text format:
//   n m
//   k v_1 ... v_k        (m lines, k >= 2, distinct ids < n)
//   t
//   u_1 ... u_t          (may be omitted when t = 0)
// Lines whose first non-blank character is '#' and blank lines are skipped.
// Errors are ParseError with a 1-based line and column.
Instance parse_hypergraph(std::string_view text);
Instance read_hypergraph_file(const std::string& path);
std::string serialize_hypergraph(const Hypergraph& g, const TerminalSet& terminals);
void write_text_file(const std::string& path, const std::string& text);

// Projection text format: "n_G n_H" then n_G image ids on one line.
ProjectionMap parse_projection(std::string_view text);
ProjectionMap read_projection_file(const std::string& path);
std::string serialize_projection(const ProjectionMap& p);

// "3", "3/4" or "0.25". Throws InputError.
Rational parse_rational(std::string_view text);

// One-line JSON object. Timings are the only non-deterministic fields.
std::string stats_json(const SparsifierOutput& out, const std::string& method, std::size_t c, std::uint64_t seed);

// Digraph with partitions as boxes, cuts as ellipses and hyperedges as diamonds;
// dead nodes are dashed, E \ E0 edges are gray.
std::string aux_graph_dot(const AuxGraph& aux);

}  // namespace hsparse
