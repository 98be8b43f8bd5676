#include "hsparse/flow.hpp"

#include <algorithm>
#include <string>

#include "hsparse/errors.hpp"
#include "subset_scan.hpp"

namespace hsparse {

namespace {
constexpr std::uint32_t kNoArc = 0xffffffffu;
}

std::size_t CutValue::value() const {
  if (over_) throw ContractViolation("cut value is over the threshold");
  return value_;
}

SplitDigraph::SplitDigraph(const Hypergraph& g) : n_(g.num_vertices()) {
  struct Forward {
    std::uint32_t from, to;
    ArcKind kind;
  };
  std::vector<Forward> forward;
  forward.reserve(n_ + g.num_edges() + 2 * g.total_size());
  for (std::uint32_t v = 0; v < n_; ++v) forward.push_back({in_node(v), out_node(v), ArcKind::vertex});
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::uint32_t x = edge_element(e);
    forward.push_back({in_node(x), out_node(x), ArcKind::edge_unit});
    for (Vertex v : g.edge(e)) {
      forward.push_back({out_node(v), in_node(x), ArcKind::incidence});
      forward.push_back({out_node(x), in_node(v), ArcKind::incidence});
    }
  }
  const std::size_t nodes = 2 * (n_ + g.num_edges());
  first_.assign(nodes + 1, 0);
  for (const Forward& f : forward) {
    ++first_[f.from + 1];
    ++first_[f.to + 1];
  }
  for (std::size_t i = 0; i < nodes; ++i) first_[i + 1] += first_[i];
  arcs_.resize(2 * forward.size());
  std::vector<std::uint32_t> fill(first_.begin(), first_.end() - 1);
  for (const Forward& f : forward) {
    std::uint32_t a = fill[f.from]++;
    std::uint32_t r = fill[f.to]++;
    arcs_[a] = {f.to, r, f.kind};
    arcs_[r] = {f.from, a, ArcKind::reverse};
  }
}

FlowEngine::FlowEngine(const Hypergraph& g)
    : g_(g),
      digraph_(g),
      flow_(digraph_.num_arcs(), 0),
      stamp_(digraph_.num_nodes(), 0),
      parent_arc_(digraph_.num_nodes(), kNoArc) {}

std::vector<char> FlowEngine::check_sets(std::span<const Vertex> a, std::span<const Vertex> b) const {
  if (a.empty() || b.empty()) throw InputError("mincut needs nonempty A and B");
  std::vector<char> in_b = membership(b, g_.num_vertices());
  for (Vertex v : a) {
    if (v >= g_.num_vertices()) throw InputError("vertex id " + std::to_string(v) + " out of range");
    if (in_b[v]) throw InputError("A and B intersect at vertex " + std::to_string(v));
  }
  return in_b;
}

void FlowEngine::reset() {
  for (std::uint32_t a : touched_) {
    flow_[a] = 0;
    flow_[digraph_.arc(a).rev] = 0;
  }
  touched_.clear();
}

bool FlowEngine::augment(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c) {
  if (++generation_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    generation_ = 1;
  }
  queue_.clear();
  for (Vertex v : a) {
    std::uint32_t s = SplitDigraph::out_node(v);
    if (stamp_[s] == generation_) continue;
    stamp_[s] = generation_;
    parent_arc_[s] = kNoArc;
    queue_.push_back(s);
  }
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    std::uint32_t u = queue_[head];
    for (std::uint32_t i = digraph_.first_arc(u); i < digraph_.end_arc(u); ++i) {
      const SplitDigraph::Arc& arc = digraph_.arc(i);
      if (stamp_[arc.to] == generation_) continue;
      if (SplitDigraph::capacity(arc.kind, c) - flow_[i] <= 0) continue;
      stamp_[arc.to] = generation_;
      parent_arc_[arc.to] = i;
      if ((arc.to & 1u) == 0 && digraph_.node_is_vertex(arc.to) && in_b[arc.to / 2]) {
        std::uint32_t node = arc.to;
        while (parent_arc_[node] != kNoArc) {
          std::uint32_t p = parent_arc_[node];
          ++flow_[p];
          --flow_[digraph_.arc(p).rev];
          touched_.push_back(p);
          node = digraph_.arc(digraph_.arc(p).rev).to;
        }
        return true;
      }
      queue_.push_back(arc.to);
    }
  }
  return false;
}

std::size_t FlowEngine::run(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c) {
  reset();
  std::size_t flow = 0;
  while (flow <= c && augment(a, in_b, c)) ++flow;
  return flow;
}

CutValue FlowEngine::mincut_value(std::span<const Vertex> a, std::span<const Vertex> b, std::size_t c) {
  std::vector<char> in_b = check_sets(a, b);
  return mincut_value_to(a, in_b, c);
}

CutValue FlowEngine::mincut_value_to(std::span<const Vertex> a, const std::vector<char>& in_b, std::size_t c) {
  std::size_t flow = run(a, in_b, c);
  return flow > c ? CutValue::over() : CutValue::exact(flow);
}

std::optional<Cut> FlowEngine::a_minimal_mincut(std::span<const Vertex> a, std::span<const Vertex> b,
                                                std::size_t c) {
  std::vector<char> in_b = check_sets(a, b);
  std::size_t flow = run(a, in_b, c);
  if (flow > c) return std::nullopt;
  // The failed search of the last round left the residual-reachable set stamped.
  Cut cut;
  for (Vertex v = 0; v < g_.num_vertices(); ++v)
    if (stamp_[SplitDigraph::out_node(v)] == generation_) cut.side.push_back(v);
  for (EdgeId e = 0; e < g_.num_edges(); ++e) {
    std::uint32_t x = digraph_.edge_element(e);
    if (stamp_[SplitDigraph::in_node(x)] == generation_ && stamp_[SplitDigraph::out_node(x)] != generation_)
      cut.boundary.push_back(e);
  }
  cut.value = cut.boundary.size();
  if (cut.value != flow) throw InternalError("residual cut does not match flow value");
  return cut;
}

CutValue mincut_value(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b, std::size_t c) {
  FlowEngine engine(g);
  return engine.mincut_value(a, b, c);
}

std::optional<Cut> a_minimal_mincut(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    std::size_t c) {
  FlowEngine engine(g);
  return engine.a_minimal_mincut(a, b, c);
}

BruteForceMincut brute_force_mincut(const Hypergraph& g, std::span<const Vertex> a, std::span<const Vertex> b,
                                    const OracleLimits& limits) {
  if (g.num_vertices() > limits.max_vertices)
    throw LimitError("brute-force mincut refuses n = " + std::to_string(g.num_vertices()) + " > " +
                     std::to_string(limits.max_vertices));
  if (a.empty() || b.empty()) throw InputError("mincut needs nonempty A and B");
  detail::MaskGraph mg(g);
  std::uint32_t am = detail::vertex_mask(a, g.num_vertices());
  std::uint32_t bm = detail::vertex_mask(b, g.num_vertices());
  if (am & bm) throw InputError("A and B intersect");
  std::uint32_t free = mg.full & ~(am | bm);
  BruteForceMincut out;
  out.value = g.num_edges() + 1;
  std::vector<std::uint32_t> best;
  // Standard submask walk over the free vertices.
  std::uint32_t sub = 0;
  while (true) {
    std::uint32_t x = am | sub;
    std::size_t value = mg.boundary_size(x);
    if (value < out.value) {
      out.value = value;
      best.clear();
    }
    if (value == out.value) best.push_back(x);
    if (sub == free) break;
    sub = (sub - free) & free;
  }
  for (std::uint32_t x : best) out.sides.push_back(detail::mask_to_set(x, g.num_vertices()));
  std::sort(out.sides.begin(), out.sides.end());
  return out;
}

}  // namespace hsparse
