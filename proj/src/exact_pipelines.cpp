#include "hsparse/exact_pipelines.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hsparse/aux_graph.hpp"
#include "hsparse/errors.hpp"
#include "subset_scan.hpp"

namespace hsparse {

namespace {

void check_limits(const Hypergraph& g, const TerminalSet& terminals, const ExactLimits& limits, const char* who) {
  if (g.num_vertices() > limits.max_vertices || g.num_vertices() > detail::kMaxMaskVertices)
    throw LimitError(std::string(who) + " refuses n = " + std::to_string(g.num_vertices()) + " (limit " +
                     std::to_string(limits.max_vertices) + ")");
  if (terminals.size() > limits.max_terminals)
    throw LimitError(std::string(who) + " refuses |T| = " + std::to_string(terminals.size()) + " (limit " +
                     std::to_string(limits.max_terminals) + ")");
}

OracleLimits oracle(const ExactLimits& limits) {
  OracleLimits o;
  o.max_vertices = limits.max_vertices;
  o.max_terminals = limits.max_terminals;
  return o;
}

// First side (containing vertex 0) of a cut with value <= c and >= d terminals on both sides.
std::optional<VertexSet> find_breaking_cut(const Hypergraph& g, const TerminalSet& terminals, std::size_t d,
                                           std::size_t c) {
  if (g.num_vertices() < 2 || terminals.size() < 2 * d) return std::nullopt;
  detail::MaskGraph mg(g);
  std::uint32_t tmask = detail::vertex_mask(terminals.terminals, g.num_vertices());
  for (std::uint32_t x = 1; x < mg.full; x += 2) {
    if (static_cast<std::size_t>(std::popcount(x & tmask)) < d) continue;
    if (static_cast<std::size_t>(std::popcount(~x & tmask)) < d) continue;
    if (mg.boundary_size(x) <= c) return detail::mask_to_set(x, g.num_vertices());
  }
  return std::nullopt;
}

SparsifierOutput slow_rec(const Hypergraph& g, const TerminalSet& terminals, std::size_t c, const ExactLimits& limits,
                          std::size_t depth) {
  check_limits(g, terminals, limits, "sparsify_slow");
  long long potential = static_cast<long long>(terminals.size()) - 5 * static_cast<long long>(c);
  std::optional<VertexSet> side =
      depth < limits.max_depth ? find_breaking_cut(g, terminals, 5 * c, c) : std::nullopt;
  if (!side) {
    SparsifierOutput out = essential_base_case(g, terminals, c, limits);
    out.stats.base_cases = 1;
    out.stats.potentials = {potential};
    return out;
  }
  VertexSet rest = complement(*side, g.num_vertices());
  Divided d = divide(g, terminals, *side, rest);
  SparsifierOutput o1 = slow_rec(d.side1.graph, d.side1.terminals, c, limits, depth + 1);
  SparsifierOutput o2 = slow_rec(d.side2.graph, d.side2.terminals, c, limits, depth + 1);
  SparsifierOutput out = combine(g, terminals, d, o1, o2);
  ++out.stats.splits;
  out.stats.potentials.insert(out.stats.potentials.begin(), potential);
  return out;
}

SparsifierOutput poly_rec(const Hypergraph& g, const TerminalSet& terminals, std::size_t c, Rational threshold,
                          const ExactLimits& limits, std::size_t depth) {
  check_limits(g, terminals, limits, "polytime_sparsify");
  if (terminals.size() >= 2 && depth < limits.max_depth) {
    TerminalExpansion te = terminal_expansion(g, terminals, oracle(limits));
    if (!te.witness.empty() && te.value < threshold) {
      Divided d = divide(g, terminals, te.witness, complement(te.witness, g.num_vertices()));
      SparsifierOutput o1 = poly_rec(d.side1.graph, d.side1.terminals, c, threshold, limits, depth + 1);
      SparsifierOutput o2 = poly_rec(d.side2.graph, d.side2.terminals, c, threshold, limits, depth + 1);
      SparsifierOutput out = combine(g, terminals, d, o1, o2);
      ++out.stats.splits;
      return out;
    }
  }
  SparsifierOutput out = essential_base_case(g, terminals, c, limits);
  out.stats.base_cases = 1;
  return out;
}

}  // namespace

SparsifierOutput essential_base_case(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                     const ExactLimits& limits) {
  if (c == 0) throw InputError("threshold c must be at least 1");
  SparsifierOutput out = identity_output(g, terminals);
  for (;;) {
    EdgeSet ess = brute_force_essential(out.sparsifier, out.terminals, c, oracle(limits));
    EdgeId pick = 0;
    while (pick < out.sparsifier.num_edges() && std::binary_search(ess.begin(), ess.end(), pick)) ++pick;
    if (pick == out.sparsifier.num_edges()) break;
    out = compose_outputs(out, contraction_output(out.sparsifier, out.terminals, EdgeSet{pick}));
  }
  return out;
}

SparsifierOutput sparsify_slow(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                               const ExactLimits& limits) {
  if (c == 0) throw InputError("threshold c must be at least 1");
  validate_terminals(terminals, g.num_vertices());
  for (Vertex t : terminals.terminals)
    if (g.degree(t) > 1) throw InputError("sparsify_slow needs degree-one terminals; reduce first");
  return slow_rec(g, terminals, c, limits, 0);
}

SparsifierOutput sparsify_slow_general(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                       const ExactLimits& limits) {
  DegreeReduction red = reduce_to_degree_one(g, terminals, c);
  SparsifierOutput inner = sparsify_slow(red.graph, red.terminals, c, limits);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();

  std::vector<Vertex> label(inner.sparsifier.num_vertices(), kNoVertex);
  std::vector<Vertex> map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex img = inner.projection(v);
    if (label[img] == kNoVertex) label[img] = next++;
    map[v] = label[img];
  }
  std::vector<std::vector<Vertex>> edges;
  SparsifierOutput out;
  for (EdgeId f = 0; f < inner.sparsifier.num_edges(); ++f) {
    if (inner.kept_edges[f] >= m) continue;  // pendant edge of a copy
    std::vector<Vertex> verts;
    for (Vertex x : inner.sparsifier.edge(f)) {
      if (label[x] == kNoVertex) throw InternalError("original edge reaches a pendant copy");
      verts.push_back(label[x]);
    }
    edges.push_back(std::move(verts));
    out.kept_edges.push_back(inner.kept_edges[f]);
  }
  out.sparsifier = Hypergraph(next, edges);
  out.projection = ProjectionMap(std::move(map), next);
  out.terminals.terminals = out.projection.apply(terminals.terminals);
  out.stats = std::move(inner.stats);
  return out;
}

TerminalExpansion terminal_expansion(const Hypergraph& g, const TerminalSet& terminals, const OracleLimits& limits) {
  validate_terminals(terminals, g.num_vertices());
  if (terminals.size() < 2) throw InputError("terminal expansion needs at least two terminals");
  if (g.num_vertices() > limits.max_vertices || g.num_vertices() > detail::kMaxMaskVertices)
    throw LimitError("terminal expansion refuses n = " + std::to_string(g.num_vertices()));
  detail::MaskGraph mg(g);
  std::uint32_t tmask = detail::vertex_mask(terminals.terminals, g.num_vertices());
  TerminalExpansion best;
  std::uint32_t arg = 0;
  for (std::uint32_t x = 1; x < mg.full; ++x) {
    std::size_t a = static_cast<std::size_t>(std::popcount(x & tmask));
    std::size_t b = terminals.size() - a;
    if (a == 0 || b == 0) continue;
    Rational q(mg.boundary_size(x), std::min(a, b));
    if (arg == 0 || q < best.value) {
      best.value = q;
      arg = x;
    }
  }
  best.witness = detail::mask_to_set(arg, g.num_vertices());
  return best;
}

Unbreakability is_edge_unbreakable(const Hypergraph& g, const TerminalSet& terminals, std::size_t d, std::size_t c,
                                   const OracleLimits& limits) {
  validate_terminals(terminals, g.num_vertices());
  if (g.num_vertices() > limits.max_vertices || g.num_vertices() > detail::kMaxMaskVertices)
    throw LimitError("unbreakability check refuses n = " + std::to_string(g.num_vertices()));
  Unbreakability out;
  if (d == 0) {
    // Any cut qualifies; V itself has none.
    if (g.num_vertices() >= 2) {
      detail::MaskGraph mg(g);
      for (std::uint32_t x = 1; x < mg.full; x += 2)
        if (mg.boundary_size(x) <= c) {
          out.unbreakable = false;
          out.witness = detail::mask_to_set(x, g.num_vertices());
          break;
        }
    }
    return out;
  }
  out.witness = find_breaking_cut(g, terminals, d, c);
  out.unbreakable = !out.witness;
  return out;
}

SparsifierOutput polytime_sparsify(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                                   const ExactLimits& limits) {
  if (c == 0) throw InputError("threshold c must be at least 1");
  validate_terminals(terminals, g.num_vertices());
  // 2 beta phi with beta = 1 and phi = 1 / (4 log2 |T|), rounded down.
  double log_kc = std::log2(static_cast<double>(std::max<std::size_t>(2, terminals.size())));
  std::uint64_t den = static_cast<std::uint64_t>(std::ceil(4.0 * log_kc * 1000.0));
  Rational threshold(2 * 1000, den);
  return poly_rec(g, terminals, c, threshold, limits, 0);
}

}  // namespace hsparse
