#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace hsparse {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate free
using EdgeSet = std::vector<EdgeId>;    // sorted, duplicate free

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Multiset of hyperedges over vertices [0, n). Stored edges always have at least two
// distinct vertices; the vertex list of each edge is sorted. Immutable once built.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t num_vertices);
  // Edges with fewer than two distinct vertices are dropped. When `kept` is given it
  // receives, per stored edge, the index of the input edge it came from.
  Hypergraph(std::size_t num_vertices, const std::vector<std::vector<Vertex>>& edges,
             std::vector<std::size_t>* kept = nullptr);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edge_begin_.size() - 1; }
  std::span<const Vertex> edge(EdgeId e) const {
    return {pins_.data() + edge_begin_[e], pins_.data() + edge_begin_[e + 1]};
  }
  std::span<const EdgeId> incident(Vertex v) const {
    return {incidence_.data() + vertex_begin_[v], incidence_.data() + vertex_begin_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return vertex_begin_[v + 1] - vertex_begin_[v]; }
  std::size_t edge_size(EdgeId e) const { return edge_begin_[e + 1] - edge_begin_[e]; }
  std::size_t rank() const { return rank_; }
  std::size_t total_size() const { return pins_.size(); }

  std::vector<std::vector<Vertex>> edge_lists() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.edge_begin_ == b.edge_begin_ && a.pins_ == b.pins_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t rank_ = 0;
  std::vector<std::size_t> edge_begin_{0};
  std::vector<Vertex> pins_;
  std::vector<std::size_t> vertex_begin_{0};
  std::vector<EdgeId> incidence_;
};

// Terminal vertices; `anchors` marks the subset created by anchored separation.
struct TerminalSet {
  VertexSet terminals;
  VertexSet anchors;

  TerminalSet() = default;
  explicit TerminalSet(VertexSet t) : terminals(std::move(t)) {}
  std::size_t size() const { return terminals.size(); }
  bool empty() const { return terminals.empty(); }
  friend bool operator==(const TerminalSet&, const TerminalSet&) = default;
};

// Total surjective map from a vertex range onto [0, image_size).
class ProjectionMap {
 public:
  ProjectionMap() = default;
  ProjectionMap(std::vector<Vertex> map, std::size_t image_size);
  static ProjectionMap identity(std::size_t n);

  std::size_t source_size() const { return map_.size(); }
  std::size_t image_size() const { return image_size_; }
  Vertex operator()(Vertex v) const { return map_[v]; }
  const std::vector<Vertex>& map() const { return map_; }
  VertexSet apply(std::span<const Vertex> vertices) const;
  // (this then next)(v) = next(this(v)).
  ProjectionMap then(const ProjectionMap& next) const;

  friend bool operator==(const ProjectionMap&, const ProjectionMap&) = default;

 private:
  std::vector<Vertex> map_;
  std::size_t image_size_ = 0;
};

// Sorts, dedups and range checks a vertex list. Throws InputError.
VertexSet make_vertex_set(std::span<const Vertex> vertices, std::size_t n);
// Membership flags for a range checked vertex list.
std::vector<char> membership(std::span<const Vertex> vertices, std::size_t n);
VertexSet complement(std::span<const Vertex> vertices, std::size_t n);
void validate_terminals(const TerminalSet& terminals, std::size_t n);

struct RestrictedItems {
  VertexSet vertices;
  std::vector<std::vector<Vertex>> edges;  // nonempty intersections, multiplicity kept
};
RestrictedItems restrict_items(const Hypergraph& g, std::span<const Vertex> vertices,
                               std::span<const EdgeId> edges, std::span<const Vertex> x);

struct InducedSubgraph {
  Hypergraph graph;
  VertexSet parent_vertex;    // local vertex -> vertex of the source graph
  EdgeSet parent_edge;        // local edge -> edge of the source graph
};
InducedSubgraph induced_subgraph(const Hypergraph& g, std::span<const Vertex> x);

EdgeSet boundary(const Hypergraph& g, std::span<const Vertex> x);
std::size_t boundary_size(const Hypergraph& g, const std::vector<char>& in_x);
// |E(X)|: edges with at least one vertex in X.
std::size_t touching_edge_count(const Hypergraph& g, const std::vector<char>& in_x);

bool is_connected(const Hypergraph& g, std::span<const Vertex> x);
std::vector<VertexSet> connected_components(const Hypergraph& g);

struct Contraction {
  Hypergraph graph;
  ProjectionMap projection;
  TerminalSet terminals;
  EdgeSet edge_origin;  // contracted-graph edge -> source edge
};
// Vertices of the result are numbered by first occurrence in 0..n-1.
Contraction contract(const Hypergraph& g, std::span<const EdgeId> edges, const TerminalSet& terminals = {});

struct SeparatedEdge {
  EdgeId original;
  EdgeId half1;
  EdgeId half2;
  std::array<Vertex, 4> anchors;  // two on side 1, then two on side 2
};

struct AnchorProvenance {
  EdgeId original;
  int side;   // 1 or 2
  int index;  // 1..4
};

struct SeparationResult {
  std::vector<SeparatedEdge> separated;
  VertexSet anchors_side1;
  VertexSet anchors_side2;
};

struct Separation {
  Hypergraph graph;  // anchors follow the original vertices
  SeparationResult result;
  std::vector<AnchorProvenance> provenance;  // indexed by anchor id - n
  TerminalSet anchor_terminals;
};
// Each crossing edge e is replaced in place by e|V1 + two anchors, then e|V2 + two anchors.
Separation separate_hyperedges(const Hypergraph& g, std::span<const Vertex> v1, std::span<const Vertex> v2);

// One side of an anchored separation. Local ids: side vertices ascending, then anchors
// two per crossing edge in edge id order.
struct AnchoredSubgraph {
  Hypergraph graph;
  TerminalSet terminals;
  VertexSet parent_vertex;    // kNoVertex for anchors
  EdgeSet parent_edge;        // halves map to the crossing edge
  std::vector<char> is_half;
  // Per crossing edge of the parent, in edge id order.
  EdgeSet crossing;
  std::vector<std::array<Vertex, 2>> crossing_anchors;
  EdgeSet crossing_half;
};
AnchoredSubgraph anchored_induced_subgraph(const Hypergraph& g, std::span<const Vertex> side,
                                           const TerminalSet& terminals);

struct DegreeReduction {
  Hypergraph graph;
  TerminalSet terminals;
  std::vector<Vertex> source;  // per vertex: itself, or the terminal it copies
  std::size_t original_vertices = 0;
};
// Every terminal t gets c pendant copies {t, t_i}; the copies become the terminals.
DegreeReduction reduce_to_degree_one(const Hypergraph& g, const TerminalSet& terminals, std::size_t c);

}  // namespace hsparse
