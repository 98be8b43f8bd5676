#include "hsparse/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "hsparse/decomposition.hpp"
#include "hsparse/enumeration.hpp"
#include "hsparse/errors.hpp"

namespace hsparse {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void merge_stats(SparsifierStats& into, const SparsifierStats& from) {
  into.rounds.insert(into.rounds.end(), from.rounds.begin(), from.rounds.end());
  into.cuts += from.cuts;
  into.recursion_nodes += from.recursion_nodes;
  into.partitions += from.partitions;
  into.phi_calls += from.phi_calls;
  into.safe_calls += from.safe_calls;
  into.base_cases += from.base_cases;
  into.splits += from.splits;
  into.potentials.insert(into.potentials.end(), from.potentials.begin(), from.potentials.end());
}

std::size_t ceil_log2(std::size_t x) {
  std::size_t l = 0;
  while ((std::size_t{1} << l) < x) ++l;
  return l;
}

}  // namespace

SparsifierOutput identity_output(const Hypergraph& g, const TerminalSet& terminals) {
  validate_terminals(terminals, g.num_vertices());
  SparsifierOutput out;
  out.sparsifier = g;
  out.projection = ProjectionMap::identity(g.num_vertices());
  out.kept_edges.resize(g.num_edges());
  std::iota(out.kept_edges.begin(), out.kept_edges.end(), EdgeId{0});
  out.terminals = terminals;
  return out;
}

SparsifierOutput contraction_output(const Hypergraph& g, const TerminalSet& terminals, const EdgeSet& edges) {
  Contraction con = contract(g, edges, terminals);
  SparsifierOutput out;
  out.sparsifier = std::move(con.graph);
  out.projection = std::move(con.projection);
  out.kept_edges = std::move(con.edge_origin);
  out.terminals = std::move(con.terminals);
  return out;
}

SparsifierOutput compose_outputs(const SparsifierOutput& first, const SparsifierOutput& next) {
  SparsifierOutput out;
  out.sparsifier = next.sparsifier;
  out.projection = first.projection.then(next.projection);
  out.kept_edges.reserve(next.kept_edges.size());
  for (EdgeId e : next.kept_edges) out.kept_edges.push_back(first.kept_edges.at(e));
  out.terminals = next.terminals;
  out.stats = first.stats;
  merge_stats(out.stats, next.stats);
  return out;
}

Divided divide(const Hypergraph& g, const TerminalSet& terminals, std::span<const Vertex> v1,
               std::span<const Vertex> v2) {
  const std::size_t n = g.num_vertices();
  std::vector<char> side(n, 0);
  for (auto [set, mark] : {std::pair{v1, 1}, std::pair{v2, 2}})
    for (Vertex v : set) {
      if (v >= n) throw InputError("vertex id " + std::to_string(v) + " out of range");
      if (side[v]) throw InputError("divide sides overlap or repeat a vertex");
      side[v] = static_cast<char>(mark);
    }
  if (v1.empty() || v2.empty() || std::count(side.begin(), side.end(), 0))
    throw InputError("divide needs a partition into two nonempty sides");
  Divided out;
  out.side1 = anchored_induced_subgraph(g, v1, terminals);
  out.side2 = anchored_induced_subgraph(g, v2, terminals);
  out.separation = separate_hyperedges(g, v1, v2).result;
  return out;
}

SparsifierOutput combine(const Hypergraph& g, const TerminalSet& terminals, const Divided& divided,
                         const SparsifierOutput& out1, const SparsifierOutput& out2) {
  const std::size_t n = g.num_vertices();
  const AnchoredSubgraph* sides[2] = {&divided.side1, &divided.side2};
  const SparsifierOutput* outs[2] = {&out1, &out2};
  std::vector<char> side_of(n, 2);
  std::vector<Vertex> local(n, kNoVertex);
  for (int s = 0; s < 2; ++s) {
    if (outs[s]->projection.source_size() != sides[s]->graph.num_vertices())
      throw InternalError("sub-sparsifier projection does not match its subproblem");
    if (outs[s]->kept_edges.size() != outs[s]->sparsifier.num_edges())
      throw InternalError("sub-sparsifier edge provenance is incomplete");
    const VertexSet& pv = sides[s]->parent_vertex;
    for (Vertex l = 0; l < pv.size(); ++l) {
      if (pv[l] == kNoVertex) continue;
      if (pv[l] >= n || side_of[pv[l]] != 2) throw InternalError("subproblem vertices do not partition the graph");
      side_of[pv[l]] = static_cast<char>(s);
      local[pv[l]] = l;
    }
  }
  if (std::count(side_of.begin(), side_of.end(), 2)) throw InternalError("vertex missing from both subproblems");

  std::vector<Vertex> hid[2] = {std::vector<Vertex>(out1.sparsifier.num_vertices(), kNoVertex),
                                std::vector<Vertex>(out2.sparsifier.num_vertices(), kNoVertex)};
  std::vector<Vertex> map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    int s = side_of[v];
    Vertex img = outs[s]->projection(local[v]);
    if (hid[s][img] == kNoVertex) hid[s][img] = next++;
    map[v] = hid[s][img];
  }

  std::vector<std::pair<EdgeId, std::vector<Vertex>>> items;
  for (int s = 0; s < 2; ++s) {
    const Hypergraph& h = outs[s]->sparsifier;
    for (EdgeId f = 0; f < h.num_edges(); ++f) {
      EdgeId origin = outs[s]->kept_edges[f];
      if (origin >= sides[s]->is_half.size()) throw InternalError("sub-sparsifier edge origin out of range");
      if (sides[s]->is_half[origin]) continue;
      std::vector<Vertex> verts;
      for (Vertex x : h.edge(f)) {
        if (hid[s][x] == kNoVertex) throw InternalError("edge keeps an anchor-only vertex after combine");
        verts.push_back(hid[s][x]);
      }
      items.emplace_back(sides[s]->parent_edge[origin], std::move(verts));
    }
  }
  if (divided.side1.crossing != divided.side2.crossing) throw InternalError("sides disagree on crossing edges");
  for (EdgeId e : divided.side1.crossing) {
    std::vector<Vertex> verts;
    for (Vertex v : g.edge(e)) verts.push_back(map[v]);
    items.emplace_back(e, std::move(verts));
  }
  std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<std::vector<Vertex>> lists;
  SparsifierOutput out;
  for (auto& [e, verts] : items) {
    lists.push_back(std::move(verts));
    out.kept_edges.push_back(e);
  }
  out.sparsifier = Hypergraph(next, lists);
  if (out.sparsifier.num_edges() != lists.size()) throw InternalError("combine produced a degenerate edge");
  out.projection = ProjectionMap(std::move(map), next);
  out.terminals.terminals = out.projection.apply(terminals.terminals);
  out.terminals.anchors = out.projection.apply(terminals.anchors);
  out.stats = out1.stats;
  merge_stats(out.stats, out2.stats);
  return out;
}

std::string to_string(BudgetMode mode) {
  switch (mode) {
    case BudgetMode::safe: return "safe";
    case BudgetMode::core: return "core";
    case BudgetMode::expander: return "expander";
    case BudgetMode::conductance: return "conductance";
  }
  return "?";
}

CutPlan plan_enumeration(const Hypergraph& g, const PhiSparsifyOptions& options) {
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  CutPlan plan;
  VertexSet all = complement({}, n);
  if (options.safe_mode || n == 0) {
    plan.budget = std::max<std::size_t>(1, m);
    plan.seeds = std::move(all);
    return plan;
  }

  // Core: grow K from a max-degree vertex while every new vertex has more than c
  // edge-disjoint paths into K. No cut of value <= c splits K.
  Vertex k0 = 0;
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) > g.degree(k0)) k0 = v;
  std::vector<char> in_core(n, 0);
  in_core[k0] = 1;
  std::vector<Vertex> order{k0};
  {
    std::vector<char> seen(n, 0);
    seen[k0] = 1;
    for (std::size_t head = 0; head < order.size(); ++head)
      for (EdgeId e : g.incident(order[head]))
        for (Vertex w : g.edge(e))
          if (!seen[w]) {
            seen[w] = 1;
            order.push_back(w);
          }
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v]) order.push_back(v);
  }
  FlowEngine engine(g);
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v : order) {
      if (in_core[v]) continue;
      Vertex a[1] = {v};
      if (engine.mincut_value_to(a, in_core, options.c).is_over()) {
        in_core[v] = 1;
        changed = true;
      }
    }
  }
  VertexSet rest;
  for (Vertex v = 0; v < n; ++v) (in_core[v] ? plan.core : rest).push_back(v);
  std::size_t core_budget = 0;
  {
    std::vector<char> visited(n, 0);
    std::vector<std::size_t> edge_stamp(m, 0);
    std::size_t stamp = 0;
    for (Vertex s : rest) {
      if (visited[s]) continue;
      ++stamp;
      std::size_t touching = 0;
      std::vector<Vertex> stack{s};
      visited[s] = 1;
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (EdgeId e : g.incident(u)) {
          if (edge_stamp[e] != stamp) {
            edge_stamp[e] = stamp;
            ++touching;
          }
          // Components of G[W]: only edges lying inside W connect.
          bool inside = true;
          for (Vertex w : g.edge(e))
            if (in_core[w]) inside = false;
          if (!inside) continue;
          for (Vertex w : g.edge(e))
            if (!visited[w]) {
              visited[w] = 1;
              stack.push_back(w);
            }
        }
      }
      core_budget = std::max(core_budget, touching);
    }
  }
  plan.mode = BudgetMode::core;
  plan.budget = core_budget;
  plan.seeds = rest;

  auto consider = [&](BudgetMode mode, std::size_t budget) {
    if (budget < plan.budget) {
      plan.mode = mode;
      plan.budget = budget;
      plan.seeds = all;
      plan.core.clear();
    }
  };
  if (options.certified && !options.phi_inv.is_infinite()) consider(BudgetMode::expander, options.phi_inv.floor_times(options.c));
  if (n <= options.exhaustive_limit && !rest.empty()) {
    ConductanceOptions copts;
    copts.exhaustive_limit = options.exhaustive_limit;
    copts.allow_heuristic = false;
    Rational phi = graph_conductance(g, copts).value;
    if (phi.num > 0) consider(BudgetMode::conductance, phi.inverse().floor_times(options.c));
  }
  return plan;
}

EdgeSet phi_sparsify_contraction_set(const Hypergraph& g, const TerminalSet& terminals,
                                     const PhiSparsifyOptions& options, SparsifierStats* stats) {
  validate_terminals(terminals, g.num_vertices());
  if (options.c == 0) throw InputError("threshold c must be at least 1");
  EdgeSet all(g.num_edges());
  std::iota(all.begin(), all.end(), EdgeId{0});
  if (stats) ++stats->phi_calls;
  if (terminals.size() < 2) return all;

  CutPlan plan = plan_enumeration(g, options);
  EnumerationParams params =
      EnumerationParams::from_phi_inv(options.c, Rational::integer(1), std::max<std::size_t>(2, g.rank()));
  params.budget = std::max<std::size_t>(1, plan.budget);
  EnumerationStats es;
  std::vector<Cut> cuts = enumerate_cut_sides(g, params, plan.seeds, &es);
  AuxGraph aux = build_pruned_auxiliary_graph(g, terminals, cuts, options.c);
  if (stats) {
    stats->cuts += cuts.size();
    stats->recursion_nodes += es.recursion_nodes;
    stats->partitions += aux.alive_partitions().size();
    if (plan.mode == BudgetMode::safe) ++stats->safe_calls;
  }

  EdgeSet contracted = aux.registry;
  for (EdgeId e : aux.edge_nodes()) {
    if (!aux.edge_alive(e)) {
      contracted.push_back(e);
    } else if (aux_allows_contraction(aux, e)) {
      apply_contraction_to_aux(aux, e);
      contracted.push_back(e);
    }
  }
  std::sort(contracted.begin(), contracted.end());
  return contracted;
}

SparsifierOutput phi_sparsify(const Hypergraph& g, const TerminalSet& terminals, const PhiSparsifyOptions& options) {
  validate_terminals(terminals, g.num_vertices());
  SparsifierStats stats;
  EdgeSet contracted;
  std::vector<VertexSet> comps = connected_components(g);
  if (comps.size() <= 1) {
    contracted = phi_sparsify_contraction_set(g, terminals, options, &stats);
  } else {
    for (const VertexSet& comp : comps) {
      InducedSubgraph sub = induced_subgraph(g, comp);
      if (sub.graph.num_edges() == 0) continue;
      TerminalSet local;
      for (Vertex t : terminals.terminals)
        if (std::binary_search(comp.begin(), comp.end(), t))
          local.terminals.push_back(static_cast<Vertex>(std::lower_bound(comp.begin(), comp.end(), t) - comp.begin()));
      for (EdgeId e : phi_sparsify_contraction_set(sub.graph, local, options, &stats))
        contracted.push_back(sub.parent_edge[e]);
    }
    std::sort(contracted.begin(), contracted.end());
  }
  SparsifierOutput out = contraction_output(g, terminals, contracted);
  out.stats = std::move(stats);
  return out;
}

Rational round_phi_inv(const PipelineConfig& config, std::size_t n, std::size_t rank) {
  long double l = static_cast<long double>(std::max<std::size_t>(1, ceil_log2(std::max<std::size_t>(n, 1))));
  long double v = 4.0L * static_cast<long double>(config.c_prime) * static_cast<long double>(std::max<std::size_t>(2, rank)) *
                  std::pow(static_cast<long double>(config.c), static_cast<long double>(config.c_exponent)) *
                  std::pow(l, static_cast<long double>(config.log_exponent));
  if (config.phi_inv_cap.is_infinite() || v < config.phi_inv_cap.to_double())
    return Rational::integer(static_cast<std::uint64_t>(v));
  return config.phi_inv_cap;
}

SparsifierOutput sparsify_round(const Hypergraph& g, const TerminalSet& terminals, const PipelineConfig& config,
                                RoundStats* round) {
  auto start = Clock::now();
  Rational phi_inv = round_phi_inv(config, g.num_vertices(), g.rank());
  ConductanceOptions copts;
  copts.exhaustive_limit = config.exhaustive_limit;
  copts.seed = config.seed;
  DecompositionResult d = expander_decompose(g, phi_inv.inverse(), copts);

  PhiSparsifyOptions po;
  po.c = config.c;
  po.phi_inv = phi_inv;
  po.safe_mode = config.safe_mode;
  po.exhaustive_limit = config.exhaustive_limit;

  const std::size_t k = d.parts.size();
  SparsifierOutput out;
  if (k <= 1) {
    out = phi_sparsify(g, terminals, po);
  } else {
    std::vector<std::size_t> part(g.num_vertices());
    for (std::size_t i = 0; i < k; ++i)
      for (Vertex v : d.parts[i]) part[v] = i;
    std::vector<Divided> divs;
    std::vector<SparsifierOutput> firsts;
    divs.reserve(k - 1);
    const Hypergraph* cur = &g;
    const TerminalSet* cur_t = &terminals;
    for (std::size_t j = 0; j + 1 < k; ++j) {
      VertexSet v1, v2;
      for (Vertex v = 0; v < cur->num_vertices(); ++v) (part[v] == j ? v1 : v2).push_back(v);
      Divided div = divide(*cur, *cur_t, v1, v2);
      firsts.push_back(phi_sparsify(div.side1.graph, div.side1.terminals, po));
      // Side-2 anchors join the earliest later part the crossing edge meets.
      const AnchoredSubgraph& s2 = div.side2;
      std::vector<std::size_t> next_part(s2.graph.num_vertices(), k);
      for (Vertex l = 0; l < s2.parent_vertex.size(); ++l)
        if (s2.parent_vertex[l] != kNoVertex) next_part[l] = part[s2.parent_vertex[l]];
      for (std::size_t i = 0; i < s2.crossing.size(); ++i) {
        std::size_t best = k;
        for (Vertex v : cur->edge(s2.crossing[i]))
          if (part[v] > j) best = std::min(best, part[v]);
        if (best == k) throw InternalError("crossing edge meets no later part");
        for (Vertex a : s2.crossing_anchors[i]) next_part[a] = best;
      }
      part = std::move(next_part);
      divs.push_back(std::move(div));
      cur = &divs.back().side2.graph;
      cur_t = &divs.back().side2.terminals;
    }
    out = phi_sparsify(*cur, *cur_t, po);
    for (std::size_t j = k - 1; j-- > 0;) {
      const Hypergraph& parent = j == 0 ? g : divs[j - 1].side2.graph;
      const TerminalSet& parent_t = j == 0 ? terminals : divs[j - 1].side2.terminals;
      out = combine(parent, parent_t, divs[j], firsts[j], out);
    }
  }
  if (round) {
    round->edges_before = g.num_edges();
    round->edges_after = out.sparsifier.num_edges();
    round->parts = k;
    round->certified_parts = static_cast<std::size_t>(std::count(d.certified.begin(), d.certified.end(), 1));
    round->crossing_edges = d.crossing_edges.size();
    round->cuts = out.stats.cuts;
    round->recursion_nodes = out.stats.recursion_nodes;
    round->phi_inv = phi_inv;
    round->seconds = seconds_since(start);
  }
  return out;
}

SparsifierOutput sparsify_fast(const Hypergraph& g, const TerminalSet& terminals, const PipelineConfig& config) {
  if (config.c == 0) throw InputError("threshold c must be at least 1");
  if (config.c_prime == 0) throw InputError("C' must be at least 1");
  auto start = Clock::now();
  SparsifierOutput out = identity_output(g, terminals);
  const std::size_t iters =
      config.max_iters ? config.max_iters : std::max<std::size_t>(1, ceil_log2(std::max<std::size_t>(2, g.num_edges())));
  for (std::size_t i = 0; i < iters && out.sparsifier.num_edges() > 0; ++i) {
    RoundStats rs;
    SparsifierOutput round = sparsify_round(out.sparsifier, out.terminals, config, &rs);
    std::size_t before = out.sparsifier.num_edges();
    out = compose_outputs(out, round);
    out.stats.rounds.push_back(rs);
    if (out.sparsifier.num_edges() >= before) break;
  }
  out.stats.seconds = seconds_since(start);
  return out;
}

}  // namespace hsparse
