#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hsparse/hypergraph.hpp"

namespace hsparse {

// One side X of a bipartition with its boundary.
struct Cut {
  VertexSet side;
  EdgeSet boundary;
  std::size_t value = 0;
  friend bool operator==(const Cut&, const Cut&) = default;
};

// A thresholded mincut value: either exact (<= c) or strictly over the threshold.
class CutValue {
 public:
  static CutValue exact(std::size_t v) { return CutValue(v, false); }
  static CutValue over() { return CutValue(0, true); }
  bool is_over() const { return over_; }
  std::size_t value() const;  // throws ContractViolation when over
  std::size_t thresholded(std::size_t c) const { return over_ ? c : (value_ < c ? value_ : c); }
  friend bool operator==(const CutValue&, const CutValue&) = default;

 private:
  CutValue(std::size_t v, bool over) : value_(v), over_(over) {}
  std::size_t value_;
  bool over_;
};

struct OracleLimits {
  std::size_t max_vertices = 20;
  std::size_t max_terminals = 12;
};

// Vertex-split incidence digraph. Node 2x is the in-node and 2x+1 the out-node of
// element x, where vertices are elements [0, n) and edge e is element n + e.
class SplitDigraph {
 public:
  enum class ArcKind : std::uint8_t { edge_unit, vertex, incidence, reverse };
  struct Arc {
    std::uint32_t to;
    std::uint32_t rev;
    ArcKind kind;
  };

  explicit SplitDigraph(const Hypergraph& g);

  std::size_t num_nodes() const { return first_.size() - 1; }
  std::size_t num_arcs() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }
  std::uint32_t first_arc(std::uint32_t node) const { return first_[node]; }
  std::uint32_t end_arc(std::uint32_t node) const { return first_[node + 1]; }
  const Arc& arc(std::uint32_t a) const { return arcs_[a]; }
  std::size_t num_vertices() const { return n_; }
  // True for vertex elements, false for hyperedge elements.
  bool node_is_vertex(std::uint32_t node) const { return node / 2 < n_; }
  std::uint32_t element_of(std::uint32_t node) const {
    return node / 2 < n_ ? node / 2 : static_cast<std::uint32_t>(node / 2 - n_);
  }
  static std::uint32_t in_node(std::uint32_t element) { return 2 * element; }
  static std::uint32_t out_node(std::uint32_t element) { return 2 * element + 1; }
  std::uint32_t edge_element(EdgeId e) const { return static_cast<std::uint32_t>(n_ + e); }
  // Capacity for threshold c; reverse arcs have capacity 0.
  static std::int32_t capacity(ArcKind kind, std::size_t c) {
    switch (kind) {
      case ArcKind::edge_unit: return 1;
      case ArcKind::reverse: return 0;
      default: return static_cast<std::int32_t>(c + 1);
    }
  }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> first_;
  std::vector<Arc> arcs_;
};

// Reusable max-flow state over one hypergraph. Not thread safe; use one per thread.
class FlowEngine {
 public:
  explicit FlowEngine(const Hypergraph& g);

  const Hypergraph& graph() const { return g_; }
  CutValue mincut_value(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t c);
  // The unique mincut whose side is contained in every (A,B)-mincut side, if the value is <= c.
  std::optional<Cut> a_minimal_mincut(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t c);
  // Same as mincut_value with B given as flags; sinks must avoid A.
  CutValue mincut_value_to(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c);

 private:
  std::size_t run(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c);
  bool augment(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c);
  void reset();
  std::vector<char> check_sets(std::span<const Vertex> a, std::span<const Vertex> b) const;

  const Hypergraph& g_;
  SplitDigraph digraph_;
  std::vector<std::int32_t> flow_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::uint32_t> stamp_;
  std::vector<std::uint32_t> parent_arc_;
  std::vector<std::uint32_t> queue_;
  std::uint32_t generation_ = 0;
};

CutValue mincut_value(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b, std::size_t c);
std::optional<Cut> a_minimal_mincut(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    std::size_t c);

struct BruteForceMincut {
  std::size_t value = 0;
  std::vector<VertexSet> sides;  // every minimizing side X with A in X and B outside
};
BruteForceMincut brute_force_mincut(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    const OracleLimits& limits = {});

}  // namespace hsparse
