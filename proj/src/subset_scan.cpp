#include "subset_scan.hpp"

#include <bit>
#include <string>

#include "hsparse/errors.hpp"

namespace hsparse::detail {

MaskGraph::MaskGraph(const Hypergraph& g) : n(g.num_vertices()) {
  if (n > kMaxMaskVertices) throw LimitError("exhaustive scan supports at most 30 vertices");
  full = n == 32 ? ~0u : ((1u << n) - 1);
  edges.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::uint32_t m = 0;
    for (Vertex v : g.edge(e)) m |= 1u << v;
    edges.push_back(m);
  }
}

std::size_t MaskGraph::boundary_size(std::uint32_t x) const {
  std::size_t count = 0;
  std::uint32_t rest = full & ~x;
  for (std::uint32_t m : edges) count += (m & x) && (m & rest);
  return count;
}

std::size_t MaskGraph::touching(std::uint32_t x) const {
  std::size_t count = 0;
  for (std::uint32_t m : edges) count += (m & x) != 0;
  return count;
}

bool MaskGraph::connected(std::uint32_t x) const {
  if (x == 0) return false;
  std::uint32_t reached = x & (~x + 1);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint32_t m : edges) {
      if (!(m & reached)) continue;
      std::uint32_t add = m & x & ~reached;
      if (add) {
        reached |= add;
        grew = true;
      }
    }
  }
  return reached == x;
}

void MaskGraph::boundary_words(std::uint32_t x, std::vector<std::uint64_t>& words) const {
  words.assign((edges.size() + 63) / 64, 0);
  std::uint32_t rest = full & ~x;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if ((edges[e] & x) && (edges[e] & rest)) words[e / 64] |= std::uint64_t{1} << (e % 64);
}

std::uint32_t vertex_mask(std::span<const Vertex> vertices, std::size_t n) {
  std::uint32_t m = 0;
  for (Vertex v : vertices) {
    if (v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range");
    m |= 1u << v;
  }
  return m;
}

VertexSet mask_to_set(std::uint32_t mask, std::size_t n) {
  VertexSet out;
  for (std::size_t v = 0; v < n; ++v)
    if (mask & (1u << v)) out.push_back(static_cast<Vertex>(v));
  return out;
}

}  // namespace hsparse::detail
