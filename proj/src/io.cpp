#include "hsparse/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hsparse/errors.hpp"

namespace hsparse {

namespace {

constexpr std::uint64_t kMaxVertices = 100'000'000;

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

// Content lines only; comments and blank lines are dropped here.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i == raw.size()) break;
      if (line.tokens.empty() && raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j]))) ++j;
      line.tokens.push_back({raw.substr(i, j - i), i + 1});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::uint64_t number(const Line& line, const Token& tok) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), v);
  if (ec != std::errc() || ptr != tok.text.data() + tok.text.size())
    throw ParseError(line.number, tok.column, "expected a non-negative integer, got '" + std::string(tok.text) + "'");
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  const Line& next(const char* what) {
    if (at_ == lines_.size())
      throw ParseError(lines_.empty() ? 1 : lines_.back().number + 1, 1, std::string("missing ") + what);
    return lines_[at_++];
  }
  bool done() const { return at_ == lines_.size(); }
  const Line& peek() const { return lines_[at_]; }

 private:
  std::vector<Line> lines_;
  std::size_t at_ = 0;
};

void expect_count(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() == count) return;
  std::size_t col = line.tokens.size() > count ? line.tokens[count].column : line.tokens.back().column;
  throw ParseError(line.number, col,
                   std::string(what) + ": expected " + std::to_string(count) + " values, got " +
                       std::to_string(line.tokens.size()));
}

Vertex vertex_id(const Line& line, const Token& tok, std::uint64_t n) {
  std::uint64_t v = number(line, tok);
  if (v >= n) throw ParseError(line.number, tok.column, "vertex id " + std::to_string(v) + " out of range");
  return static_cast<Vertex>(v);
}

void reject_trailing(const Cursor& cur) {
  if (!cur.done()) throw ParseError(cur.peek().number, cur.peek().tokens.front().column, "unexpected trailing content");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(std::span<const Vertex> xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

}  // namespace

Instance parse_hypergraph(std::string_view text) {
  Cursor cur(split_lines(text));
  const Line& head = cur.next("header 'n m'");
  expect_count(head, 2, "header");
  std::uint64_t n = number(head, head.tokens[0]);
  std::uint64_t m = number(head, head.tokens[1]);
  if (n > kMaxVertices) throw ParseError(head.number, head.tokens[0].column, "too many vertices");

  std::vector<std::vector<Vertex>> edges;
  for (std::uint64_t i = 0; i < m; ++i) {
    const Line& line = cur.next("hyperedge line");
    std::uint64_t k = number(line, line.tokens[0]);
    if (k < 2) throw ParseError(line.number, line.tokens[0].column, "hyperedge needs at least 2 vertices");
    if (k + 1 != line.tokens.size())
      throw ParseError(line.number, line.tokens[0].column,
                       "hyperedge declares " + std::to_string(k) + " vertices, lists " +
                           std::to_string(line.tokens.size() - 1));
    std::vector<Vertex> e;
    for (std::size_t j = 1; j < line.tokens.size(); ++j) {
      Vertex v = vertex_id(line, line.tokens[j], n);
      if (std::find(e.begin(), e.end(), v) != e.end())
        throw ParseError(line.number, line.tokens[j].column, "repeated vertex in hyperedge");
      e.push_back(v);
    }
    edges.push_back(std::move(e));
  }

  const Line& tline = cur.next("terminal count");
  expect_count(tline, 1, "terminal count");
  std::uint64_t t = number(tline, tline.tokens[0]);
  if (t > n) throw ParseError(tline.number, tline.tokens[0].column, "more terminals than vertices");
  VertexSet terms;
  if (t > 0) {
    const Line& line = cur.next("terminal list");
    expect_count(line, static_cast<std::size_t>(t), "terminal list");
    for (const Token& tok : line.tokens) {
      Vertex v = vertex_id(line, tok, n);
      if (std::find(terms.begin(), terms.end(), v) != terms.end())
        throw ParseError(line.number, tok.column, "repeated terminal");
      terms.push_back(v);
    }
  }
  reject_trailing(cur);
  std::sort(terms.begin(), terms.end());
  return {Hypergraph(static_cast<std::size_t>(n), edges), TerminalSet(std::move(terms))};
}

Instance read_hypergraph_file(const std::string& path) { return parse_hypergraph(read_file(path)); }

std::string serialize_hypergraph(const Hypergraph& g, const TerminalSet& terminals) {
  std::string s = std::to_string(g.num_vertices()) + " " + std::to_string(g.num_edges()) + "\n";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    s += std::to_string(g.edge_size(e));
    for (Vertex v : g.edge(e)) s += " " + std::to_string(v);
    s += "\n";
  }
  s += std::to_string(terminals.size()) + "\n";
  for (std::size_t i = 0; i < terminals.size(); ++i) s += (i ? " " : "") + std::to_string(terminals.terminals[i]);
  if (!terminals.empty()) s += "\n";
  return s;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!out) throw InputError("write failed for " + path);
}

ProjectionMap parse_projection(std::string_view text) {
  Cursor cur(split_lines(text));
  const Line& head = cur.next("header 'n_G n_H'");
  expect_count(head, 2, "projection header");
  std::uint64_t ng = number(head, head.tokens[0]);
  std::uint64_t nh = number(head, head.tokens[1]);
  if (ng > kMaxVertices || nh > kMaxVertices) throw ParseError(head.number, 1, "projection too large");
  if (nh > ng) throw ParseError(head.number, head.tokens[1].column, "n_H exceeds n_G");
  std::vector<Vertex> map;
  if (ng > 0) {
    const Line& line = cur.next("image list");
    expect_count(line, static_cast<std::size_t>(ng), "image list");
    std::vector<char> hit(static_cast<std::size_t>(nh), 0);
    for (const Token& tok : line.tokens) {
      Vertex v = vertex_id(line, tok, nh);
      hit[v] = 1;
      map.push_back(v);
    }
    if (std::find(hit.begin(), hit.end(), 0) != hit.end())
      throw ParseError(line.number, 1, "projection is not surjective");
  } else if (nh > 0) {
    throw ParseError(head.number, head.tokens[1].column, "projection is not surjective");
  }
  reject_trailing(cur);
  return ProjectionMap(std::move(map), static_cast<std::size_t>(nh));
}

ProjectionMap read_projection_file(const std::string& path) { return parse_projection(read_file(path)); }

std::string serialize_projection(const ProjectionMap& p) {
  std::string s = std::to_string(p.source_size()) + " " + std::to_string(p.image_size()) + "\n";
  for (std::size_t v = 0; v < p.source_size(); ++v) s += (v ? " " : "") + std::to_string(p.map()[v]);
  if (p.source_size()) s += "\n";
  return s;
}

Rational parse_rational(std::string_view text) {
  auto whole = [&](std::string_view part) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size() || v > (1ull << 40))
      throw InputError("not a rational number: '" + std::string(text) + "'");
    return v;
  };
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::uint64_t den = whole(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(whole(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 9) throw InputError("too many decimals in '" + std::string(text) + "'");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::uint64_t ip = dot == 0 ? 0 : whole(text.substr(0, dot));
    std::uint64_t fp = frac.empty() ? 0 : whole(frac);
    return Rational(ip * scale + fp, scale);
  }
  return Rational::integer(whole(text));
}

std::string stats_json(const SparsifierOutput& out, const std::string& method, std::size_t c, std::uint64_t seed) {
  const SparsifierStats& st = out.stats;
  nlohmann::ordered_json j;
  j["method"] = method;
  j["c"] = c;
  j["seed"] = seed;
  j["n"] = out.sparsifier.num_vertices();
  j["m"] = out.sparsifier.num_edges();
  j["terminals"] = out.terminals.size();
  j["iterations"] = st.rounds.size();
  nlohmann::ordered_json rounds = nlohmann::ordered_json::array();
  for (const RoundStats& r : st.rounds) {
    nlohmann::ordered_json jr;
    jr["m_before"] = r.edges_before;
    jr["m_after"] = r.edges_after;
    jr["parts"] = r.parts;
    jr["certified_parts"] = r.certified_parts;
    jr["crossing_edges"] = r.crossing_edges;
    jr["cuts"] = r.cuts;
    jr["recursion_nodes"] = r.recursion_nodes;
    jr["phi_inv"] = r.phi_inv.to_string();
    jr["seconds"] = r.seconds;
    rounds.push_back(std::move(jr));
  }
  j["rounds"] = std::move(rounds);
  j["cuts"] = st.cuts;
  j["recursion_nodes"] = st.recursion_nodes;
  j["partitions"] = st.partitions;
  j["phi_calls"] = st.phi_calls;
  j["safe_calls"] = st.safe_calls;
  j["base_cases"] = st.base_cases;
  j["splits"] = st.splits;
  j["potentials"] = st.potentials;
  j["seconds"] = st.seconds;
  return j.dump();
}

std::string aux_graph_dot(const AuxGraph& aux) {
  std::string s = "digraph aux {\n  rankdir=LR;\n";
  auto style = [](bool alive) { return alive ? std::string() : std::string(",style=dashed"); };
  for (std::size_t p = 0; p < aux.partitions.size(); ++p)
    s += "  p" + std::to_string(p) + " [shape=box,label=\"P" + std::to_string(p) + " {" +
         join(aux.partitions[p].side_a) + "} mc=" + std::to_string(aux.mincut_value[p]) + "\"" +
         style(aux.partition_alive[p]) + "];\n";
  for (std::size_t x = 0; x < aux.cuts.size(); ++x)
    s += "  c" + std::to_string(x) + " [shape=ellipse,label=\"C" + std::to_string(x) + " {" +
         join(aux.cuts[x].side) + "} v=" + std::to_string(aux.cuts[x].value) + "\"" + style(aux.cut_alive[x]) +
         "];\n";
  for (EdgeId e = 0; e < aux.num_edges(); ++e) {
    bool in_e0 = !std::binary_search(aux.registry.begin(), aux.registry.end(), e);
    s += "  e" + std::to_string(e) + " [shape=diamond,label=\"e" + std::to_string(e) + "\"" +
         (in_e0 ? style(aux.edge_alive(e)) : std::string(",color=gray,fontcolor=gray")) + "];\n";
  }
  for (std::size_t x = 0; x < aux.cuts.size(); ++x)
    if (aux.cut_partition[x] != AuxGraph::kNone)
      s += "  p" + std::to_string(aux.cut_partition[x]) + " -> c" + std::to_string(x) + ";\n";
  for (EdgeId e = 0; e < aux.num_edges(); ++e)
    for (std::size_t x : aux.edge_cuts[e]) s += "  c" + std::to_string(x) + " -> e" + std::to_string(e) + ";\n";
  s += "}\n";
  return s;
}

}  // namespace hsparse
