#include "hsparse/aux_graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hsparse/errors.hpp"
#include "subset_scan.hpp"

namespace hsparse {

TerminalPartition canonical_partition(const TerminalSet& terminals, std::span<const Vertex> a) {
  VertexSet side(a.begin(), a.end());
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  for (Vertex v : side)
    if (!std::binary_search(terminals.terminals.begin(), terminals.terminals.end(), v))
      throw InputError("partition side holds a non-terminal");
  if (side.empty() || side.size() == terminals.size()) throw InputError("trivial terminal partition");
  if (side.front() != terminals.terminals.front()) {
    VertexSet other;
    std::set_difference(terminals.terminals.begin(), terminals.terminals.end(), side.begin(), side.end(),
                        std::back_inserter(other));
    side = std::move(other);
  }
  return {std::move(side)};
}

VertexSet other_side(const TerminalSet& terminals, const TerminalPartition& p) {
  VertexSet other;
  std::set_difference(terminals.terminals.begin(), terminals.terminals.end(), p.side_a.begin(), p.side_a.end(),
                      std::back_inserter(other));
  return other;
}

Usefulness is_useful_partition(FlowEngine& engine, std::span<const Vertex> a, const TerminalSet& terminals,
                               std::size_t c) {
  TerminalPartition p = canonical_partition(terminals, a);
  VertexSet side_a(a.begin(), a.end());
  std::sort(side_a.begin(), side_a.end());
  side_a.erase(std::unique(side_a.begin(), side_a.end()), side_a.end());
  VertexSet side_b;
  std::set_difference(terminals.terminals.begin(), terminals.terminals.end(), side_a.begin(), side_a.end(),
                      std::back_inserter(side_b));
  Usefulness out;
  out.witness = engine.a_minimal_mincut(side_a, side_b, c);
  out.useful = out.witness && is_connected(engine.graph(), out.witness->side);
  return out;
}

Usefulness is_useful_partition(const Hypergraph& g, std::span<const Vertex> a, const TerminalSet& terminals,
                               std::size_t c) {
  validate_terminals(terminals, g.num_vertices());
  FlowEngine engine(g);
  return is_useful_partition(engine, a, terminals, c);
}

bool AuxGraph::edge_alive(EdgeId e) const {
  for (std::size_t k : edge_cuts[e])
    if (cut_alive[k]) return true;
  return false;
}

EdgeSet AuxGraph::edge_nodes() const {
  EdgeSet out;
  for (EdgeId e = 0; e < edge_cuts.size(); ++e)
    if (edge_alive(e)) out.push_back(e);
  return out;
}

std::vector<std::size_t> AuxGraph::alive_partitions() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < partitions.size(); ++p)
    if (partition_alive[p]) out.push_back(p);
  return out;
}

std::vector<std::size_t> AuxGraph::alive_cuts_of(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t k : partition_cuts[p])
    if (cut_alive[k]) out.push_back(k);
  return out;
}

std::vector<std::size_t> AuxGraph::alive_cuts_of_edge(EdgeId e) const {
  std::vector<std::size_t> out;
  for (std::size_t k : edge_cuts[e])
    if (cut_alive[k]) out.push_back(k);
  return out;
}

AuxGraph build_auxiliary_graph(const Hypergraph& g, const TerminalSet& terminals, const std::vector<Cut>& cuts,
                               std::size_t c, AuxPruning pruning) {
  validate_terminals(terminals, g.num_vertices());
  const std::size_t n = g.num_vertices();
  AuxGraph aux;
  aux.edge_cuts.assign(g.num_edges(), {});
  if (terminals.size() < 2) {
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (pruning == AuxPruning::two_sided) aux.registry.push_back(e);
    return aux;
  }

  FlowEngine engine(g);
  std::map<VertexSet, std::size_t> partition_index;
  std::vector<char> partition_kept;
  std::set<VertexSet> seen_sides;

  for (const Cut& cut : cuts) {
    VertexSet key = cut.side;
    if (key.empty() || key.size() >= n) continue;
    if (key.front() != 0) key = complement(key, n);
    if (!seen_sides.insert(std::move(key)).second) continue;

    VertexSet a;
    std::set_intersection(terminals.terminals.begin(), terminals.terminals.end(), cut.side.begin(),
                          cut.side.end(), std::back_inserter(a));
    std::size_t p = AuxGraph::kNone;
    if (!a.empty() && a.size() < terminals.size()) {
      TerminalPartition tp = canonical_partition(terminals, a);
      auto it = partition_index.find(tp.side_a);
      if (it == partition_index.end()) {
        bool keep = false;
        std::size_t value = 0;
        if (pruning == AuxPruning::two_sided) {
          Usefulness ua = is_useful_partition(engine, tp.side_a, terminals, c);
          if (ua.useful) {
            Usefulness ub = is_useful_partition(engine, other_side(terminals, tp), terminals, c);
            keep = ub.useful;
            value = ua.witness->value;
          }
        } else {
          CutValue v = engine.mincut_value(tp.side_a, other_side(terminals, tp), c);
          keep = !v.is_over();
          if (keep) value = v.value();
        }
        it = partition_index.emplace(tp.side_a, aux.partitions.size()).first;
        aux.partitions.push_back(std::move(tp));
        aux.mincut_value.push_back(value);
        aux.partition_cuts.emplace_back();
        partition_kept.push_back(keep);
      }
      std::size_t q = it->second;
      if (partition_kept[q] && cut.value == aux.mincut_value[q]) p = q;
    }
    if (p == AuxGraph::kNone && pruning == AuxPruning::two_sided) continue;

    std::size_t k = aux.cuts.size();
    aux.cuts.push_back(cut);
    aux.cut_partition.push_back(p);
    aux.cut_alive.push_back(1);
    if (p != AuxGraph::kNone) aux.partition_cuts[p].push_back(k);
    for (EdgeId e : cut.boundary) aux.edge_cuts[e].push_back(k);
  }

  aux.partition_alive.resize(aux.partitions.size());
  for (std::size_t p = 0; p < aux.partitions.size(); ++p)
    aux.partition_alive[p] = partition_kept[p] && !aux.partition_cuts[p].empty();
  if (pruning == AuxPruning::two_sided)
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (aux.edge_cuts[e].empty()) aux.registry.push_back(e);
  return aux;
}

AuxGraph build_pruned_auxiliary_graph(const Hypergraph& g, const TerminalSet& terminals,
                                      const std::vector<Cut>& cuts, std::size_t c) {
  return build_auxiliary_graph(g, terminals, cuts, c, AuxPruning::two_sided);
}

EdgeSet essential_edges_from_aux(const AuxGraph& aux) {
  std::vector<char> essential(aux.num_edges(), 0);
  for (std::size_t p : aux.alive_partitions()) {
    std::vector<std::size_t> ks = aux.alive_cuts_of(p);
    if (ks.empty()) continue;
    EdgeSet common = aux.cuts[ks.front()].boundary;
    for (std::size_t i = 1; i < ks.size() && !common.empty(); ++i) {
      const EdgeSet& b = aux.cuts[ks[i]].boundary;
      EdgeSet next;
      std::set_intersection(common.begin(), common.end(), b.begin(), b.end(), std::back_inserter(next));
      common = std::move(next);
    }
    for (EdgeId e : common) essential[e] = 1;
  }
  EdgeSet out;
  for (EdgeId e = 0; e < essential.size(); ++e)
    if (essential[e]) out.push_back(e);
  return out;
}

bool aux_allows_contraction(const AuxGraph& aux, EdgeId e) {
  if (e >= aux.num_edges()) throw InputError("edge out of range");
  for (std::size_t k : aux.alive_cuts_of_edge(e)) {
    std::size_t p = aux.cut_partition[k];
    if (p == AuxGraph::kNone || !aux.partition_alive[p]) continue;
    bool avoided = false;
    for (std::size_t j : aux.alive_cuts_of(p))
      if (!std::binary_search(aux.cuts[j].boundary.begin(), aux.cuts[j].boundary.end(), e)) {
        avoided = true;
        break;
      }
    if (!avoided) return false;
  }
  return true;
}

void apply_contraction_to_aux(AuxGraph& aux, EdgeId e) {
  if (!aux_allows_contraction(aux, e)) throw ContractViolation("edge is essential in the auxiliary graph");
  for (std::size_t k : aux.edge_cuts[e]) {
    if (!aux.cut_alive[k]) continue;
    aux.cut_alive[k] = 0;
    std::size_t p = aux.cut_partition[k];
    if (p != AuxGraph::kNone && aux.partition_alive[p] && aux.alive_cuts_of(p).empty()) aux.partition_alive[p] = 0;
  }
}

EdgeSet brute_force_essential(const Hypergraph& g, const TerminalSet& terminals, std::size_t c,
                              const OracleLimits& limits) {
  validate_terminals(terminals, g.num_vertices());
  if (g.num_vertices() > limits.max_vertices || terminals.size() > limits.max_terminals)
    throw LimitError("brute-force essential edges refuses n = " + std::to_string(g.num_vertices()) +
                     ", k = " + std::to_string(terminals.size()));
  const std::size_t k = terminals.size();
  if (k < 2) return {};
  detail::MaskGraph mg(g);
  const std::size_t words = (g.num_edges() + 63) / 64;
  const std::uint32_t tfull = (std::uint32_t{1} << k) - 1;

  // Per canonical terminal mask (bit 0 set): best value and the common boundary.
  std::vector<std::size_t> best(std::size_t{1} << k, static_cast<std::size_t>(-1));
  std::vector<std::uint64_t> common((std::size_t{1} << k) * words, 0);
  std::vector<std::uint64_t> bw;

  for (std::uint32_t x = 1; x < mg.full; ++x) {
    std::uint32_t tm = 0;
    for (std::size_t i = 0; i < k; ++i)
      if (x >> terminals.terminals[i] & 1) tm |= std::uint32_t{1} << i;
    if (tm == 0 || tm == tfull) continue;
    if (!(tm & 1)) tm = tfull & ~tm;
    std::size_t value = mg.boundary_size(x);
    if (value > c || value > best[tm]) continue;
    mg.boundary_words(x, bw);
    std::uint64_t* slot = common.data() + std::size_t{tm} * words;
    if (value < best[tm]) {
      best[tm] = value;
      std::copy(bw.begin(), bw.end(), slot);
    } else {
      for (std::size_t w = 0; w < words; ++w) slot[w] &= bw[w];
    }
  }

  std::vector<std::uint64_t> acc(words, 0);
  for (std::uint32_t tm = 1; tm < tfull; tm += 2)
    if (best[tm] <= c)
      for (std::size_t w = 0; w < words; ++w) acc[w] |= common[std::size_t{tm} * words + w];
  EdgeSet out;
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if (acc[e / 64] >> (e % 64) & 1) out.push_back(e);
  return out;
}

}  // namespace hsparse
