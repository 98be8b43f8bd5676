#pragma once

// Bitmask view of small hypergraphs for the exhaustive oracles.

#include <cstdint>
#include <span>
#include <vector>

#include "hsparse/hypergraph.hpp"

namespace hsparse::detail {

inline constexpr std::size_t kMaxMaskVertices = 30;

struct MaskGraph {
  explicit MaskGraph(const Hypergraph& g);

  std::size_t n;
  std::uint32_t full;
  std::vector<std::uint32_t> edges;

  std::size_t boundary_size(std::uint32_t x) const;
  std::size_t touching(std::uint32_t x) const;
  bool connected(std::uint32_t x) const;
  // Edge ids of the boundary packed into 64-bit words.
  void boundary_words(std::uint32_t x, std::vector<std::uint64_t>& words) const;
};

std::uint32_t vertex_mask(std::span<const Vertex> vertices, std::size_t n);
VertexSet mask_to_set(std::uint32_t mask, std::size_t n);

}  // namespace hsparse::detail
