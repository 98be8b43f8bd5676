#include "hsparse/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "hsparse/errors.hpp"

namespace hsparse {

namespace {

struct Query {
  VertexSet t1;
  VertexSet t2;
};

std::string join(const VertexSet& s, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(s[i]);
  }
  return out;
}

std::vector<Query> build_queries(const TerminalSet& terminals, const VerifyOptions& options) {
  const VertexSet& t = terminals.terminals;
  const std::size_t k = t.size();
  std::vector<Query> out;
  auto split = [&](auto which) {
    Query q;
    for (std::size_t i = 0; i < k; ++i) {
      int w = which(i);
      if (w == 1) q.t1.push_back(t[i]);
      if (w == 2) q.t2.push_back(t[i]);
    }
    return q;
  };
  switch (options.mode) {
    case VerifyMode::exhaustive: {
      if (k > options.limits.max_terminals)
        throw LimitError("exhaustive verification refuses |T| = " + std::to_string(k));
      // Bipartitions with t[0] on the first side.
      for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); mask += 2)
        out.push_back(split([&](std::size_t i) { return (mask >> i & 1) ? 1 : 2; }));
      break;
    }
    case VerifyMode::disjoint_pairs: {
      if (k > options.max_pair_terminals)
        throw LimitError("disjoint-pair verification refuses |T| = " + std::to_string(k));
      std::uint64_t total = 1;
      for (std::size_t i = 0; i < k; ++i) total *= 3;
      for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<int> digit(k);
        std::uint64_t x = code;
        for (std::size_t i = 0; i < k; ++i, x /= 3) digit[i] = static_cast<int>(x % 3);
        Query q = split([&](std::size_t i) { return digit[i]; });
        if (!q.t1.empty() && !q.t2.empty()) out.push_back(std::move(q));
      }
      break;
    }
    case VerifyMode::sampled: {
      if (k < 2) break;
      for (std::size_t j = 0; j < k; ++j) out.push_back(split([&](std::size_t i) { return i == j ? 1 : 2; }));
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<int> pick(0, 2);
      for (std::size_t s = 0; s < options.samples; ++s) {
        Query q;
        do {
          q = split([&](std::size_t) { return pick(rng); });
        } while (q.t1.empty() || q.t2.empty());
        out.push_back(std::move(q));
      }
      break;
    }
  }
  return out;
}

}  // namespace

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::exhaustive: return "exhaustive";
    case VerifyMode::disjoint_pairs: return "pairs";
    case VerifyMode::sampled: return "sampled";
  }
  return "?";
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "mode: " << to_string(mode);
  if (mode == VerifyMode::sampled) os << " (" << samples << " samples, seed " << seed << ")";
  os << "\nchecked: " << checked << "\nfailures: " << failed << "\n";
  for (const VerificationFailure& f : failures)
    os << "  T1={" << join(f.t1, ",") << "} T2={" << join(f.t2, ",") << "} G=" << f.value_g << " H=" << f.value_h
       << "\n";
  os << "result: " << (passed ? "PASS" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::to_lines() const {
  std::ostringstream os;
  os << "verify mode=" << to_string(mode) << " samples=" << samples << " seed=" << seed << " checked=" << checked
     << " failed=" << failed << " passed=" << (passed ? 1 : 0) << "\n";
  for (const VerificationFailure& f : failures)
    os << "failure t1=" << join(f.t1, ",") << " t2=" << join(f.t2, ",") << " g=" << f.value_g << " h=" << f.value_h
       << "\n";
  return os.str();
}

VerificationReport verify_sparsifier(const Hypergraph& g, const TerminalSet& terminals, const Hypergraph& h,
                                     const ProjectionMap& projection, std::size_t c, const VerifyOptions& options) {
  validate_terminals(terminals, g.num_vertices());
  if (projection.source_size() != g.num_vertices() || projection.image_size() != h.num_vertices())
    throw InputError("projection dimensions do not match the hypergraphs");
  std::vector<Query> queries = build_queries(terminals, options);

  std::vector<char> bad(queries.size(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> values(queries.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    FlowEngine eg(g), eh(h);
    for (std::size_t i = begin; i < queries.size(); i += step) {
      const Query& q = queries[i];
      std::size_t vg = eg.mincut_value(q.t1, q.t2, c).thresholded(c);
      VertexSet a = projection.apply(q.t1), b = projection.apply(q.t2);
      bool overlap = false;
      for (Vertex x : a)
        if (std::binary_search(b.begin(), b.end(), x)) overlap = true;
      std::size_t vh = overlap ? c : eh.mincut_value(a, b, c).thresholded(c);
      values[i] = {vg, vh};
      bad[i] = vg != vh;
    }
  };
  std::size_t threads = std::max<std::size_t>(1, std::min(options.threads, queries.size()));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (std::thread& th : pool) th.join();
  }

  VerificationReport report;
  report.mode = options.mode;
  report.samples = options.mode == VerifyMode::sampled ? options.samples : 0;
  report.seed = options.mode == VerifyMode::sampled ? options.seed : 0;
  report.checked = queries.size();
  for (std::size_t i = 0; i < queries.size(); ++i) {
    if (!bad[i]) continue;
    ++report.failed;
    if (report.failures.size() < options.max_failures)
      report.failures.push_back({queries[i].t1, queries[i].t2, values[i].first, values[i].second});
  }
  report.passed = report.failed == 0;
  return report;
}

}  // namespace hsparse
