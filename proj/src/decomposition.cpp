#include "hsparse/decomposition.hpp"

#include <algorithm>
#include <random>

#include "hsparse/errors.hpp"
#include "subset_scan.hpp"

namespace hsparse {

namespace {

Rational ratio(std::size_t cut, std::size_t in, std::size_t out) {
  std::size_t den = std::min(in, out);
  return den == 0 ? Rational::infinity() : Rational(cut, den);
}

ConductanceResult exhaustive(const Hypergraph& g) {
  detail::MaskGraph mg(g);
  ConductanceResult best;
  best.exact = true;
  std::uint32_t arg = 0;
  for (std::uint32_t x = 1; x < mg.full; ++x) {
    std::size_t cut = 0, in = 0, out = 0;
    std::uint32_t rest = mg.full & ~x;
    for (std::uint32_t e : mg.edges) {
      bool a = e & x, b = e & rest;
      cut += a && b;
      in += a;
      out += b;
    }
    Rational q = ratio(cut, in, out);
    if (arg == 0 || q < best.value) {
      best.value = q;
      arg = x;
    }
  }
  if (arg) best.witness = detail::mask_to_set(arg, g.num_vertices());
  return best;
}

// Conductance of every BFS prefix from one seed.
void sweep(const Hypergraph& g, Vertex seed, ConductanceResult& best) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> pins(g.num_edges(), 0);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order{seed};
  seen[seed] = 1;
  std::size_t cut = 0, in = 0, full = 0;
  std::size_t best_len = 0;
  Rational best_value = Rational::infinity();
  for (std::size_t head = 0; head + 1 < n && head < order.size(); ++head) {
    Vertex u = order[head];
    for (EdgeId e : g.incident(u)) {
      std::size_t before = pins[e]++;
      if (before == 0) {
        ++in;
        ++cut;
      }
      if (pins[e] == g.edge_size(e)) {
        ++full;
        --cut;
      }
    }
    Rational q = ratio(cut, in, g.num_edges() - full);
    if (q < best_value) {
      best_value = q;
      best_len = head + 1;
    }
    for (EdgeId e : g.incident(u))
      for (Vertex w : g.edge(e))
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
  }
  if (best_len && best_value < best.value) {
    best.value = best_value;
    best.witness.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(best_len));
    std::sort(best.witness.begin(), best.witness.end());
  }
}

}  // namespace

Rational conductance(const Hypergraph& g, std::span<const Vertex> s) {
  VertexSet x = make_vertex_set(s, g.num_vertices());
  if (x.empty() || x.size() == g.num_vertices()) throw InputError("conductance needs a proper nonempty subset");
  std::vector<char> in = membership(x, g.num_vertices());
  std::size_t cut = boundary_size(g, in);
  std::size_t inside = touching_edge_count(g, in);
  for (char& b : in) b = !b;
  return ratio(cut, inside, touching_edge_count(g, in));
}

ConductanceResult graph_conductance(const Hypergraph& g, const ConductanceOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n < 2) return {Rational::infinity(), {}, true};
  if (n <= options.exhaustive_limit && n <= detail::kMaxMaskVertices) return exhaustive(g);
  if (!options.allow_heuristic)
    throw LimitError("exact conductance refuses n = " + std::to_string(n));

  ConductanceResult best;
  // A component is a zero-conductance witness whenever both sides carry edges.
  std::vector<VertexSet> comps = connected_components(g);
  if (comps.size() > 1) {
    for (const VertexSet& comp : comps) {
      Rational q = conductance(g, comp);
      if (q < best.value) {
        best.value = q;
        best.witness = comp;
      }
    }
    if (best.value == Rational::integer(0)) return best;
  }
  std::mt19937_64 rng(options.seed);
  std::vector<Vertex> seeds;
  Vertex lo = 0, hi = 0;
  for (Vertex v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(lo)) lo = v;
    if (g.degree(v) > g.degree(hi)) hi = v;
  }
  seeds.push_back(lo);
  seeds.push_back(hi);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (seeds.size() < std::min(options.sweep_seeds, n)) seeds.push_back(pick(rng));
  for (Vertex s : seeds) sweep(g, s, best);
  return best;
}

EdgeSet crossing_edges_of(const Hypergraph& g, const std::vector<VertexSet>& parts) {
  std::vector<std::size_t> owner(g.num_vertices(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Vertex v : parts[i]) owner[v] = i;
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto pins = g.edge(e);
    for (Vertex v : pins)
      if (owner[v] != owner[pins.front()]) {
        out.push_back(e);
        break;
      }
  }
  return out;
}

DecompositionResult expander_decompose(const Hypergraph& g, Rational phi, const ConductanceOptions& options) {
  if (phi.is_infinite() || phi.num == 0 || phi > Rational::integer(1))
    throw InputError("phi must lie in (0, 1]");
  DecompositionResult result;
  result.phi = phi;
  std::vector<VertexSet> work{complement({}, g.num_vertices())};
  if (g.num_vertices() == 0) work.clear();
  while (!work.empty()) {
    VertexSet part = std::move(work.back());
    work.pop_back();
    InducedSubgraph sub = induced_subgraph(g, part);
    const Hypergraph& h = sub.graph;
    if (h.num_vertices() <= 1 || h.num_edges() <= 1) {
      result.parts.push_back(std::move(part));
      result.certified.push_back(1);
      continue;
    }
    ConductanceResult found = graph_conductance(h, options);
    if (!found.witness.empty() && found.value < phi) {
      VertexSet a, b;
      std::vector<char> in = membership(found.witness, h.num_vertices());
      for (Vertex v = 0; v < h.num_vertices(); ++v) (in[v] ? a : b).push_back(sub.parent_vertex[v]);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      work.push_back(std::move(a));
      work.push_back(std::move(b));
      continue;
    }
    result.certified.push_back(found.exact);
    result.parts.push_back(std::move(part));
  }
  // Stable order: by smallest vertex.
  std::vector<std::size_t> idx(result.parts.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return result.parts[x] < result.parts[y]; });
  DecompositionResult sorted;
  sorted.phi = phi;
  for (std::size_t i : idx) {
    sorted.parts.push_back(std::move(result.parts[i]));
    sorted.certified.push_back(result.certified[i]);
  }
  sorted.crossing_edges = crossing_edges_of(g, sorted.parts);
  return sorted;
}

}  // namespace hsparse
