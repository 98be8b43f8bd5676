#include "hsparse/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hsparse/errors.hpp"

namespace hsparse {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<Vertex> parent_;
};

void check_vertex(Vertex v, std::size_t n) {
  if (v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range (n = " + std::to_string(n) + ")");
}

}  // namespace

Hypergraph::Hypergraph(std::size_t num_vertices) : n_(num_vertices), vertex_begin_(num_vertices + 1, 0) {}

Hypergraph::Hypergraph(std::size_t num_vertices, const std::vector<std::vector<Vertex>>& edges,
                       std::vector<std::size_t>* kept)
    : n_(num_vertices) {
  if (kept) kept->clear();
  std::vector<Vertex> scratch;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    scratch = edges[i];
    for (Vertex v : scratch) check_vertex(v, n_);
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    if (scratch.size() < 2) continue;
    pins_.insert(pins_.end(), scratch.begin(), scratch.end());
    edge_begin_.push_back(pins_.size());
    rank_ = std::max(rank_, scratch.size());
    if (kept) kept->push_back(i);
  }
  vertex_begin_.assign(n_ + 1, 0);
  for (Vertex v : pins_) ++vertex_begin_[v + 1];
  for (std::size_t v = 0; v < n_; ++v) vertex_begin_[v + 1] += vertex_begin_[v];
  incidence_.resize(pins_.size());
  std::vector<std::size_t> fill(vertex_begin_.begin(), vertex_begin_.end() - 1);
  for (EdgeId e = 0; e < num_edges(); ++e) {
    for (Vertex v : edge(e)) incidence_[fill[v]++] = e;
  }
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) out.emplace_back(edge(e).begin(), edge(e).end());
  return out;
}

ProjectionMap::ProjectionMap(std::vector<Vertex> map, std::size_t image_size)
    : map_(std::move(map)), image_size_(image_size) {
  std::vector<char> hit(image_size_, 0);
  for (Vertex v : map_) {
    if (v >= image_size_) throw InputError("projection image " + std::to_string(v) + " out of range");
    hit[v] = 1;
  }
  if (std::find(hit.begin(), hit.end(), 0) != hit.end()) throw InputError("projection is not surjective");
}

ProjectionMap ProjectionMap::identity(std::size_t n) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  return ProjectionMap(std::move(map), n);
}

VertexSet ProjectionMap::apply(std::span<const Vertex> vertices) const {
  VertexSet out;
  out.reserve(vertices.size());
  for (Vertex v : vertices) {
    check_vertex(v, map_.size());
    out.push_back(map_[v]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ProjectionMap ProjectionMap::then(const ProjectionMap& next) const {
  if (next.source_size() != image_size_) throw InputError("projection composition size mismatch");
  std::vector<Vertex> map(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) map[v] = next.map_[map_[v]];
  return ProjectionMap(std::move(map), next.image_size_);
}

VertexSet make_vertex_set(std::span<const Vertex> vertices, std::size_t n) {
  VertexSet out(vertices.begin(), vertices.end());
  for (Vertex v : out) check_vertex(v, n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<char> membership(std::span<const Vertex> vertices, std::size_t n) {
  std::vector<char> in(n, 0);
  for (Vertex v : vertices) {
    check_vertex(v, n);
    in[v] = 1;
  }
  return in;
}

VertexSet complement(std::span<const Vertex> vertices, std::size_t n) {
  std::vector<char> in = membership(vertices, n);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

void validate_terminals(const TerminalSet& terminals, std::size_t n) {
  for (Vertex t : terminals.terminals) check_vertex(t, n);
  if (!std::is_sorted(terminals.terminals.begin(), terminals.terminals.end()) ||
      std::adjacent_find(terminals.terminals.begin(), terminals.terminals.end()) != terminals.terminals.end())
    throw InputError("terminal list must be sorted and duplicate free");
  for (Vertex a : terminals.anchors)
    if (!std::binary_search(terminals.terminals.begin(), terminals.terminals.end(), a))
      throw InputError("anchor " + std::to_string(a) + " is not a terminal");
}

RestrictedItems restrict_items(const Hypergraph& g, std::span<const Vertex> vertices,
                               std::span<const EdgeId> edges, std::span<const Vertex> x) {
  std::vector<char> in = membership(x, g.num_vertices());
  RestrictedItems out;
  for (Vertex v : make_vertex_set(vertices, g.num_vertices()))
    if (in[v]) out.vertices.push_back(v);
  for (EdgeId e : edges) {
    if (e >= g.num_edges()) throw InputError("edge id " + std::to_string(e) + " out of range");
    std::vector<Vertex> part;
    for (Vertex v : g.edge(e))
      if (in[v]) part.push_back(v);
    if (!part.empty()) out.edges.push_back(std::move(part));
  }
  return out;
}

InducedSubgraph induced_subgraph(const Hypergraph& g, std::span<const Vertex> x) {
  if (x.empty()) throw InputError("induced subgraph of an empty vertex set");
  InducedSubgraph out;
  out.parent_vertex = make_vertex_set(x, g.num_vertices());
  std::vector<Vertex> local(g.num_vertices(), kNoVertex);
  for (std::size_t i = 0; i < out.parent_vertex.size(); ++i) local[out.parent_vertex[i]] = static_cast<Vertex>(i);

  std::vector<char> seen(g.num_edges(), 0);
  std::vector<std::vector<Vertex>> edges;
  EdgeSet candidates;
  for (Vertex v : out.parent_vertex)
    for (EdgeId e : g.incident(v))
      if (!seen[e]) {
        seen[e] = 1;
        candidates.push_back(e);
      }
  std::sort(candidates.begin(), candidates.end());
  for (EdgeId e : candidates) {
    std::vector<Vertex> part;
    for (Vertex v : g.edge(e))
      if (local[v] != kNoVertex) part.push_back(local[v]);
    edges.push_back(std::move(part));
  }
  std::vector<std::size_t> kept;
  out.graph = Hypergraph(out.parent_vertex.size(), edges, &kept);
  out.parent_edge.reserve(kept.size());
  for (std::size_t k : kept) out.parent_edge.push_back(candidates[k]);
  return out;
}

EdgeSet boundary(const Hypergraph& g, std::span<const Vertex> x) {
  std::vector<char> in = membership(x, g.num_vertices());
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    bool any_in = false, any_out = false;
    for (Vertex v : g.edge(e)) (in[v] ? any_in : any_out) = true;
    if (any_in && any_out) out.push_back(e);
  }
  return out;
}

std::size_t boundary_size(const Hypergraph& g, const std::vector<char>& in_x) {
  std::size_t count = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    bool any_in = false, any_out = false;
    for (Vertex v : g.edge(e)) (in_x[v] ? any_in : any_out) = true;
    count += any_in && any_out;
  }
  return count;
}

std::size_t touching_edge_count(const Hypergraph& g, const std::vector<char>& in_x) {
  std::size_t count = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (Vertex v : g.edge(e))
      if (in_x[v]) {
        ++count;
        break;
      }
  return count;
}

bool is_connected(const Hypergraph& g, std::span<const Vertex> x) {
  if (x.empty()) throw InputError("connectivity of an empty vertex set");
  std::vector<char> in = membership(x, g.num_vertices());
  std::vector<char> reached(g.num_vertices(), 0);
  std::vector<char> used(g.num_edges(), 0);
  std::vector<Vertex> stack{x[0]};
  reached[x[0]] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (EdgeId e : g.incident(u)) {
      if (used[e]) continue;
      used[e] = 1;
      for (Vertex w : g.edge(e))
        if (in[w] && !reached[w]) {
          reached[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
  }
  return count == make_vertex_set(x, g.num_vertices()).size();
}

std::vector<VertexSet> connected_components(const Hypergraph& g) {
  UnionFind uf(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (Vertex v : g.edge(e)) uf.unite(g.edge(e)[0], v);
  std::vector<VertexSet> out;
  std::vector<Vertex> slot(g.num_vertices(), kNoVertex);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    Vertex root = uf.find(v);
    if (slot[root] == kNoVertex) {
      slot[root] = static_cast<Vertex>(out.size());
      out.emplace_back();
    }
    out[slot[root]].push_back(v);
  }
  return out;
}

Contraction contract(const Hypergraph& g, std::span<const EdgeId> edges, const TerminalSet& terminals) {
  const std::size_t n = g.num_vertices();
  validate_terminals(terminals, n);
  UnionFind uf(n);
  std::vector<char> removed(g.num_edges(), 0);
  for (EdgeId e : edges) {
    if (e >= g.num_edges()) throw InputError("edge id " + std::to_string(e) + " out of range");
    removed[e] = 1;
    for (Vertex v : g.edge(e)) uf.unite(g.edge(e)[0], v);
  }
  std::vector<Vertex> label(n, kNoVertex);
  std::vector<Vertex> map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex root = uf.find(v);
    if (label[root] == kNoVertex) label[root] = next++;
    map[v] = label[root];
  }
  std::vector<std::vector<Vertex>> images;
  EdgeSet origin;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (removed[e]) continue;
    std::vector<Vertex> image;
    for (Vertex v : g.edge(e)) image.push_back(map[v]);
    images.push_back(std::move(image));
    origin.push_back(e);
  }
  Contraction out;
  std::vector<std::size_t> kept;
  out.graph = Hypergraph(next, images, &kept);
  for (std::size_t k : kept) out.edge_origin.push_back(origin[k]);
  out.projection = ProjectionMap(std::move(map), next);
  out.terminals.terminals = out.projection.apply(terminals.terminals);
  out.terminals.anchors = out.projection.apply(terminals.anchors);
  return out;
}

namespace {

// Returns side flags (1 or 2) and checks that v1, v2 partition [0, n).
std::vector<char> side_flags(std::span<const Vertex> v1, std::span<const Vertex> v2, std::size_t n) {
  std::vector<char> side(n, 0);
  for (Vertex v : v1) {
    check_vertex(v, n);
    side[v] = 1;
  }
  for (Vertex v : v2) {
    check_vertex(v, n);
    if (side[v] == 1) throw InputError("V1 and V2 overlap at vertex " + std::to_string(v));
    side[v] = 2;
  }
  if (std::find(side.begin(), side.end(), 0) != side.end()) throw InputError("V1 and V2 do not cover V");
  return side;
}

}  // namespace

Separation separate_hyperedges(const Hypergraph& g, std::span<const Vertex> v1, std::span<const Vertex> v2) {
  const std::size_t n = g.num_vertices();
  std::vector<char> side = side_flags(v1, v2, n);
  Separation out;
  std::vector<std::vector<Vertex>> edges;
  Vertex next = static_cast<Vertex>(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::vector<Vertex> a, b;
    for (Vertex v : g.edge(e)) (side[v] == 1 ? a : b).push_back(v);
    if (a.empty() || b.empty()) {
      edges.emplace_back(g.edge(e).begin(), g.edge(e).end());
      continue;
    }
    SeparatedEdge sep{e, static_cast<EdgeId>(edges.size()), static_cast<EdgeId>(edges.size() + 1), {}};
    for (int i = 0; i < 4; ++i) {
      sep.anchors[i] = next++;
      out.provenance.push_back({e, i < 2 ? 1 : 2, i + 1});
    }
    a.push_back(sep.anchors[0]);
    a.push_back(sep.anchors[1]);
    b.push_back(sep.anchors[2]);
    b.push_back(sep.anchors[3]);
    edges.push_back(std::move(a));
    edges.push_back(std::move(b));
    out.result.anchors_side1.insert(out.result.anchors_side1.end(), {sep.anchors[0], sep.anchors[1]});
    out.result.anchors_side2.insert(out.result.anchors_side2.end(), {sep.anchors[2], sep.anchors[3]});
    out.result.separated.push_back(sep);
  }
  out.graph = Hypergraph(next, edges);
  for (const SeparatedEdge& sep : out.result.separated)
    out.anchor_terminals.terminals.insert(out.anchor_terminals.terminals.end(), sep.anchors.begin(), sep.anchors.end());
  out.anchor_terminals.anchors = out.anchor_terminals.terminals;
  return out;
}

AnchoredSubgraph anchored_induced_subgraph(const Hypergraph& g, std::span<const Vertex> side,
                                           const TerminalSet& terminals) {
  if (side.empty()) throw InputError("anchored subgraph of an empty side");
  const std::size_t n = g.num_vertices();
  validate_terminals(terminals, n);
  AnchoredSubgraph out;
  std::vector<char> in = membership(side, n);
  std::vector<Vertex> local(n, kNoVertex);
  for (Vertex v = 0; v < n; ++v)
    if (in[v]) {
      local[v] = static_cast<Vertex>(out.parent_vertex.size());
      out.parent_vertex.push_back(v);
    }
  const std::size_t side_size = out.parent_vertex.size();

  std::vector<char> seen(g.num_edges(), 0);
  EdgeSet candidates;
  for (Vertex v : out.parent_vertex)
    for (EdgeId e : g.incident(v))
      if (!seen[e]) {
        seen[e] = 1;
        candidates.push_back(e);
      }
  std::sort(candidates.begin(), candidates.end());

  std::vector<std::vector<Vertex>> edges;
  Vertex next = static_cast<Vertex>(side_size);
  for (EdgeId e : candidates) {
    std::vector<Vertex> part;
    bool crosses = false;
    for (Vertex v : g.edge(e)) {
      if (in[v])
        part.push_back(local[v]);
      else
        crosses = true;
    }
    if (crosses) {
      std::array<Vertex, 2> anchors{next, static_cast<Vertex>(next + 1)};
      next += 2;
      part.push_back(anchors[0]);
      part.push_back(anchors[1]);
      out.crossing.push_back(e);
      out.crossing_anchors.push_back(anchors);
      out.crossing_half.push_back(static_cast<EdgeId>(edges.size()));
    }
    // A non-crossing edge meeting the side lies fully inside it, so it has >= 2 vertices.
    edges.push_back(std::move(part));
    out.parent_edge.push_back(e);
    out.is_half.push_back(crosses ? 1 : 0);
  }
  out.graph = Hypergraph(next, edges);
  if (out.graph.num_edges() != edges.size()) throw InternalError("anchored subgraph dropped an edge");
  out.parent_vertex.resize(next, kNoVertex);

  for (Vertex t : terminals.terminals)
    if (in[t]) out.terminals.terminals.push_back(local[t]);
  for (Vertex a : terminals.anchors)
    if (in[a]) out.terminals.anchors.push_back(local[a]);
  for (Vertex a = static_cast<Vertex>(side_size); a < next; ++a) {
    out.terminals.terminals.push_back(a);
    out.terminals.anchors.push_back(a);
  }
  return out;
}

DegreeReduction reduce_to_degree_one(const Hypergraph& g, const TerminalSet& terminals, std::size_t c) {
  if (c == 0) throw InputError("threshold c must be at least 1");
  validate_terminals(terminals, g.num_vertices());
  DegreeReduction out;
  out.original_vertices = g.num_vertices();
  std::vector<std::vector<Vertex>> edges = g.edge_lists();
  out.source.resize(g.num_vertices());
  std::iota(out.source.begin(), out.source.end(), Vertex{0});
  Vertex next = static_cast<Vertex>(g.num_vertices());
  // A duplicate t' tied to t by c parallel edges, with t' split into c degree-1 copies.
  for (Vertex t : terminals.terminals) {
    for (std::size_t i = 0; i < c; ++i) {
      edges.push_back({t, next});
      out.source.push_back(t);
      out.terminals.terminals.push_back(next);
      ++next;
    }
  }
  out.graph = Hypergraph(next, edges);
  return out;
}

}  // namespace hsparse
