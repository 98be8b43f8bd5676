#include "hsparse/enumeration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hsparse/errors.hpp"
#include "subset_scan.hpp"

namespace hsparse {

EnumerationParams EnumerationParams::from_phi_inv(std::size_t c, Rational phi_inv, std::size_t r) {
  if (phi_inv.is_infinite()) throw InputError("phi_inv must be finite");
  EnumerationParams p;
  p.c = c;
  p.phi_inv = phi_inv;
  p.r = r;
  p.budget = std::max<std::size_t>(1, phi_inv.floor_times(c));
  p.max_depth = r * c;
  return p;
}

EnumerationParams EnumerationParams::safe(const Hypergraph& g, std::size_t c) {
  EnumerationParams p =
      from_phi_inv(c, Rational::integer(std::max<std::size_t>(1, g.num_edges())), std::max<std::size_t>(2, g.rank()));
  p.budget = std::max<std::size_t>(1, g.num_edges());
  return p;
}

namespace {

class Searcher {
 public:
  Searcher(const Hypergraph& g, const EnumerationParams& p)
      : g_(g),
        p_(p),
        disc_(g.num_vertices(), 0),
        vis_(g.num_edges(), 0),
        inside_(g.num_vertices(), 0),
        outside_(g.num_vertices(), 0),
        touch_(g.num_edges(), 0) {}

  // Returns the number of recursion nodes used.
  std::size_t run(Vertex seed, const TrimOverlay& start, std::size_t depth) {
    seed_ = seed;
    trims_ = start;
    std::sort(trims_.begin(), trims_.end());
    for (auto [e, v] : trims_) ++outside_[v];
    memo_.clear();
    nodes_ = 0;
    add_inside(seed);
    if (depth <= p_.max_depth) node(depth);
    remove_inside(seed);
    for (auto [e, v] : trims_) --outside_[v];
    return nodes_;
  }

  std::set<VertexSet>& found() { return found_; }

 private:
  bool trimmed(EdgeId e, Vertex v) const {
    for (auto [te, tv] : trims_)
      if (te == e && tv == v) return true;
    return false;
  }

  std::size_t distinct_trim_edges_with(EdgeId extra) const {
    std::vector<EdgeId> edges{extra};
    for (auto [e, v] : trims_) edges.push_back(e);
    std::sort(edges.begin(), edges.end());
    return static_cast<std::size_t>(std::unique(edges.begin(), edges.end()) - edges.begin());
  }

  void add_inside(Vertex v) {
    ++inside_[v];
    if (inside_[v] > 1) return;
    for (EdgeId e : g_.incident(v))
      if (touch_[e]++ == 0) ++inside_edges_;
  }
  void remove_inside(Vertex v) {
    --inside_[v];
    if (inside_[v] > 0) return;
    for (EdgeId e : g_.incident(v))
      if (--touch_[e] == 0) --inside_edges_;
  }

  void bump() {
    if (++gen_ == 0) {
      std::fill(disc_.begin(), disc_.end(), 0);
      std::fill(vis_.begin(), vis_.end(), 0);
      gen_ = 1;
    }
  }

  struct Search {
    std::vector<std::pair<Vertex, EdgeId>> order;  // discovered vertex, edge it came through
    std::vector<EdgeId> visited;
    bool stopped = false;
  };

  Search search() {
    bump();
    Search s;
    disc_[seed_] = gen_;
    std::vector<Vertex> stack{seed_};
    while (!stack.empty() && !s.stopped) {
      Vertex u = stack.back();
      stack.pop_back();
      for (EdgeId f : g_.incident(u)) {
        if (vis_[f] == gen_ || trimmed(f, u)) continue;
        vis_[f] = gen_;
        s.visited.push_back(f);
        if (s.visited.size() == p_.budget + 1) {
          s.stopped = true;
          break;
        }
        for (Vertex w : g_.edge(f)) {
          if (disc_[w] == gen_ || trimmed(f, w)) continue;
          disc_[w] = gen_;
          s.order.emplace_back(w, f);
          stack.push_back(w);
        }
      }
    }
    return s;
  }

  void maybe_emit(const Search& s) {
    if (s.order.size() + 1 >= g_.num_vertices()) return;  // X = V is never a cut
    // disc_ still marks X for this generation.
    std::size_t value = 0;
    VertexSet side{seed_};
    for (auto [w, f] : s.order) side.push_back(w);
    std::vector<EdgeId> seen;
    for (Vertex u : side)
      for (EdgeId f : g_.incident(u)) {
        if (std::find(seen.begin(), seen.end(), f) != seen.end()) continue;
        seen.push_back(f);
        for (Vertex w : g_.edge(f))
          if (disc_[w] != gen_) {
            ++value;
            break;
          }
        if (value > p_.c) return;
      }
    std::sort(side.begin(), side.end());
    found_.insert(std::move(side));
  }

  void node(std::size_t depth) {
    ++nodes_;
    Search s = search();
    if (!s.stopped) maybe_emit(s);
    if (depth >= p_.max_depth) return;
    if (p_.policy == TrimPolicy::discovery)
      branch_discovery(s, depth);
    else
      branch_literal(s, depth);
  }

  void recurse_with(EdgeId f, Vertex v, std::size_t depth) {
    trims_.emplace_back(f, v);
    ++outside_[v];
    node(depth + 1);
    --outside_[v];
    trims_.pop_back();
  }

  void branch_discovery(const Search& s, std::size_t depth) {
    if (inside_edges_ > p_.budget) return;
    std::vector<Vertex> added;
    for (std::size_t j = 0; j < s.order.size(); ++j) {
      if (j > 0) {
        Vertex prev = s.order[j - 1].first;
        add_inside(prev);
        added.push_back(prev);
        if (inside_edges_ > p_.budget) break;
      }
      auto [v, f] = s.order[j];
      if (inside_[v]) continue;
      if (distinct_trim_edges_with(f) <= p_.c) recurse_with(f, v, depth);
      if (outside_[v]) break;  // v is outside on every consistent branch
    }
    for (Vertex v : added) remove_inside(v);
  }

  void branch_literal(const Search& s, std::size_t depth) {
    for (EdgeId f : s.visited)
      for (Vertex v : g_.edge(f)) {
        if (v == seed_ || trimmed(f, v)) continue;
        if (distinct_trim_edges_with(f) > p_.c) continue;
        TrimOverlay next = trims_;
        next.emplace_back(f, v);
        std::sort(next.begin(), next.end());
        if (!memo_.insert(next).second) continue;
        recurse_with(f, v, depth);
      }
  }

  const Hypergraph& g_;
  const EnumerationParams& p_;
  Vertex seed_ = 0;
  TrimOverlay trims_;
  std::vector<std::uint32_t> disc_;
  std::vector<std::uint32_t> vis_;
  std::uint32_t gen_ = 0;
  std::vector<std::uint32_t> inside_;
  std::vector<std::uint32_t> outside_;
  std::vector<std::uint32_t> touch_;
  std::size_t inside_edges_ = 0;
  std::set<TrimOverlay> memo_;
  std::size_t nodes_ = 0;
  std::set<VertexSet> found_;
};

Cut make_cut(const Hypergraph& g, VertexSet side) {
  Cut cut;
  cut.boundary = boundary(g, side);
  cut.value = cut.boundary.size();
  cut.side = std::move(side);
  return cut;
}

std::set<VertexSet> search_seeds(const Hypergraph& g, const EnumerationParams& params,
                                 std::span<const Vertex> seeds, EnumerationStats* stats) {
  Searcher searcher(g, params);
  for (Vertex seed : seeds) {
    if (seed >= g.num_vertices()) throw InputError("seed out of range");
    std::size_t nodes = searcher.run(seed, {}, 0);
    if (stats) {
      ++stats->seeds;
      stats->recursion_nodes += nodes;
      stats->max_nodes_per_seed = std::max(stats->max_nodes_per_seed, nodes);
    }
  }
  return std::move(searcher.found());
}

}  // namespace

bool is_small_side(const Hypergraph& g, std::span<const Vertex> x) {
  std::vector<char> in = membership(x, g.num_vertices());
  std::size_t inside = touching_edge_count(g, in);
  for (char& b : in) b = !b;
  return inside <= touching_edge_count(g, in);
}

std::vector<Cut> enumerate_cut_sides(const Hypergraph& g, const EnumerationParams& params,
                                     std::span<const Vertex> seeds, EnumerationStats* stats) {
  std::vector<Cut> out;
  for (const VertexSet& side : search_seeds(g, params, seeds, stats)) out.push_back(make_cut(g, side));
  return out;
}

std::vector<Cut> enumerate_connected_cuts(const Hypergraph& g, const EnumerationParams& params,
                                          EnumerationStats* stats) {
  VertexSet seeds = complement({}, g.num_vertices());
  std::vector<Cut> out;
  for (const VertexSet& side : search_seeds(g, params, seeds, stats)) {
    std::vector<char> in = membership(side, g.num_vertices());
    if (touching_edge_count(g, in) > params.budget || !is_small_side(g, side)) continue;
    out.push_back(make_cut(g, side));
  }
  return out;
}

std::vector<Cut> enumerate_cuts_from_seed(const Hypergraph& g, const EnumerationParams& params, Vertex seed,
                                          const TrimOverlay& start, std::size_t depth, EnumerationStats* stats) {
  if (seed >= g.num_vertices()) throw InputError("seed out of range");
  Searcher searcher(g, params);
  std::size_t nodes = searcher.run(seed, start, depth);
  if (stats) {
    ++stats->seeds;
    stats->recursion_nodes += nodes;
    stats->max_nodes_per_seed = std::max(stats->max_nodes_per_seed, nodes);
  }
  std::vector<Cut> out;
  for (const VertexSet& side : searcher.found()) out.push_back(make_cut(g, side));
  return out;
}

std::vector<Cut> brute_force_connected_cuts(const Hypergraph& g, std::size_t c, const OracleLimits& limits) {
  if (g.num_vertices() > limits.max_vertices)
    throw LimitError("brute-force connected cuts refuses n = " + std::to_string(g.num_vertices()));
  detail::MaskGraph mg(g);
  std::vector<Cut> out;
  for (std::uint32_t x = 1; x < mg.full; ++x) {
    if (mg.boundary_size(x) > c) continue;
    if (mg.touching(x) > mg.touching(mg.full & ~x)) continue;
    if (!mg.connected(x)) continue;
    out.push_back(make_cut(g, detail::mask_to_set(x, g.num_vertices())));
  }
  std::sort(out.begin(), out.end(), [](const Cut& a, const Cut& b) { return a.side < b.side; });
  return out;
}

}  // namespace hsparse
