#include "hsparse/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "hsparse/errors.hpp"

namespace hsparse {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<Vertex> random_edge(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  std::vector<Vertex> out;
  std::sample(all.begin(), all.end(), std::back_inserter(out), size, rng);
  return out;
}

TerminalSet random_terminals(Rng& rng, std::size_t n, std::size_t k) {
  std::vector<Vertex> t = random_edge(rng, n, std::min(k, n));
  std::sort(t.begin(), t.end());
  return TerminalSet(std::move(t));
}

}  // namespace

Instance random_instance(const RandomShape& shape, std::uint64_t seed) {
  if (shape.n < 2 || shape.max_rank < 2) throw InputError("random instance needs n >= 2 and rank >= 2");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  if (shape.connected) {
    std::vector<Vertex> order(shape.n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t joined = 1;
    while (joined < shape.n) {
      std::size_t size = uniform(rng, 2, std::min(shape.max_rank, shape.n - joined + 1));
      std::vector<Vertex> e{order[uniform(rng, 0, joined - 1)]};
      for (std::size_t i = 0; i + 1 < size; ++i) e.push_back(order[joined++]);
      edges.push_back(std::move(e));
    }
  }
  while (edges.size() < shape.m) edges.push_back(random_edge(rng, shape.n, uniform(rng, 2, std::min(shape.max_rank, shape.n))));
  std::shuffle(edges.begin(), edges.end(), rng);
  Instance out;
  out.graph = Hypergraph(shape.n, edges);
  out.terminals = random_terminals(rng, shape.n, shape.terminals);
  return out;
}

Instance path_instance(std::size_t n) {
  if (n < 2) throw InputError("path needs at least two vertices");
  std::vector<std::vector<Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return {Hypergraph(n, edges), TerminalSet({0, static_cast<Vertex>(n - 1)})};
}

Instance pruning_counterexample(std::map<std::string, EdgeId>* names) {
  // v1..v7 are ids 0..6; v1, v2, v7 are terminals.
  const std::vector<std::pair<std::string, std::vector<Vertex>>> labelled = {
      {"a", {0, 2}},  {"b", {1, 2}},  {"c0", {2, 3}}, {"c1", {2, 3}}, {"c2", {2, 3}}, {"d", {3, 4}},
      {"e", {3, 5}},  {"f1", {4, 6}}, {"f2", {4, 6}}, {"f3", {5, 6}}, {"f4", {5, 6}}, {"g", {4, 5}},
  };
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t i = 0; i < labelled.size(); ++i) {
    edges.push_back(labelled[i].second);
    if (names) (*names)[labelled[i].first] = static_cast<EdgeId>(i);
  }
  return {Hypergraph(7, edges), TerminalSet({0, 1, 6})};
}

Instance pendant_terminal_family(std::size_t n, std::uint64_t seed) {
  const std::size_t k = 4;
  if (n < k + 8) throw InputError("pendant family needs n >= 12");
  Rng rng(seed);
  const std::size_t core = n - k;
  std::vector<std::vector<Vertex>> edges;
  // Core: a cyclic 3-uniform band plus random triples, so every core cut is large.
  for (Vertex v = 0; v < core; ++v)
    edges.push_back({v, static_cast<Vertex>((v + 1) % core), static_cast<Vertex>((v + 2) % core)});
  for (std::size_t i = 0; i < 2 * core; ++i) edges.push_back(random_edge(rng, core, 3));
  TerminalSet terminals;
  for (std::size_t i = 0; i < k; ++i) {
    Vertex t = static_cast<Vertex>(core + i);
    terminals.terminals.push_back(t);
    for (int j = 0; j < 2; ++j) {
      std::vector<Vertex> e = random_edge(rng, core, 2);
      e.push_back(t);
      edges.push_back(std::move(e));
    }
  }
  return {Hypergraph(n, edges), terminals};
}

Instance two_cluster_instance(std::size_t cluster_size, std::size_t terminals_per_side, std::size_t bridges,
                              std::uint64_t seed) {
  if (cluster_size < 2) throw InputError("clusters need at least two vertices");
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  const std::size_t body = 2 * cluster_size;
  for (std::size_t side = 0; side < 2; ++side) {
    Vertex base = static_cast<Vertex>(side * cluster_size);
    for (Vertex i = 0; i < cluster_size; ++i)
      for (Vertex j = i + 1; j < cluster_size; ++j) edges.push_back({base + i, base + j});
  }
  for (std::size_t i = 0; i < bridges; ++i)
    edges.push_back({static_cast<Vertex>(uniform(rng, 0, cluster_size - 1)),
                     static_cast<Vertex>(cluster_size + uniform(rng, 0, cluster_size - 1))});
  TerminalSet terminals;
  Vertex next = static_cast<Vertex>(body);
  for (std::size_t side = 0; side < 2; ++side)
    for (std::size_t i = 0; i < terminals_per_side; ++i) {
      Vertex host = static_cast<Vertex>(side * cluster_size + uniform(rng, 0, cluster_size - 1));
      edges.push_back({host, next});
      terminals.terminals.push_back(next++);
    }
  return {Hypergraph(next, edges), terminals};
}

Instance large_random_instance(std::size_t n, std::size_t m, std::size_t r, std::size_t k, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(m);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  while (edges.size() < m) {
    std::vector<Vertex> e;
    while (e.size() < r) {
      Vertex v = pick(rng);
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    edges.push_back(std::move(e));
  }
  Instance out;
  out.graph = Hypergraph(n, edges);
  out.terminals = random_terminals(rng, n, k);
  return out;
}

}  // namespace hsparse
