#include "core/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pcc {

std::vector<BitSet> LabeledGraph::adjacency() const {
  std::vector<BitSet> adj(n, BitSet(n));
  for (auto [u, v] : edges) {
    adj[u].set(v);
    adj[v].set(u);
  }
  return adj;
}

LabeledGraph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidArgument("graph: vertex index out of range (n=" + std::to_string(n) + ")");
    if (u == v) throw InvalidArgument("graph: loops are not allowed");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw InvalidArgument("graph: duplicate edge");
  LabeledGraph g;
  g.n = n;
  g.edges = std::move(edges);
  return g;
}

LabeledGraph complete_graph(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  return lines;
}

}  // namespace

LabeledGraph parse_graph(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'graph v1 <n> <m>'");
  std::istringstream hdr(lines[0]);
  std::string magic, version;
  long long n = -1, m = -1;
  std::string extra;
  hdr >> magic >> version >> n >> m;
  if (magic != "graph" || version != "v1" || n < 0 || m < 0 || (hdr >> extra))
    throw ParseError(1, "bad header, expected 'graph v1 <n> <m>'");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (long long e = 0; e < m; ++e) {
    const std::size_t lineno = static_cast<std::size_t>(e) + 2;
    if (lineno > lines.size()) throw ParseError(lines.size() + 1, "missing edge line");
    std::istringstream ls(lines[lineno - 1]);
    long long u = 0, v = 0;
    if (!(ls >> u >> v) || (ls >> extra) || u < 1 || v < 1 || u > n || v > n)
      throw ParseError(lineno, "expected edge 'u v' with 1-indexed vertices");
    edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
  }
  for (std::size_t i = static_cast<std::size_t>(m) + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected trailing content");
  try {
    return make_graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const InvalidArgument& e) {
    throw ParseError(2, e.what());
  }
}

std::string format_graph(const LabeledGraph& g) {
  std::string out =
      "graph v1 " + std::to_string(g.n) + " " + std::to_string(g.edges.size()) + "\n";
  for (auto [u, v] : g.edges)
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

std::string to_dot(const LabeledGraph& g) {
  std::string out = "graph G {\n";
  for (std::size_t v = 0; v < g.n; ++v) {
    out += "  " + std::to_string(v + 1);
    if (!g.payloads.empty() && !g.payloads[v].empty()) out += " [label=\"" + g.payloads[v] + "\"]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges)
    out += "  " + std::to_string(u + 1) + " -- " + std::to_string(v + 1) + ";\n";
  out += "}\n";
  return out;
}

namespace {

std::vector<std::size_t> parse_vertex_list(const std::string& s, std::size_t n,
                                           std::size_t lineno) {
  std::istringstream is(s);
  std::vector<std::size_t> out;
  long long v = 0;
  while (is >> v) {
    if (v < 1 || static_cast<std::size_t>(v) > n)
      throw ParseError(lineno, "vertex index " + std::to_string(v) + " out of range");
    out.push_back(static_cast<std::size_t>(v - 1));
  }
  if (!is.eof()) throw ParseError(lineno, "expected 1-indexed vertex list");
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ParseError(lineno, "duplicate vertex in biclique side");
  return out;
}

}  // namespace

BicliqueFile parse_bcp(const std::string& text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "empty input, expected 'bcp v1 <n_vertices> <n_bicliques>'");
  std::istringstream hdr(lines[0]);
  std::string magic, version, extra;
  long long n = -1, k = -1;
  hdr >> magic >> version >> n >> k;
  if (magic != "bcp" || version != "v1" || n < 0 || k < 0 || (hdr >> extra))
    throw ParseError(1, "bad header, expected 'bcp v1 <n_vertices> <n_bicliques>'");

  BicliqueFile f;
  f.n_vertices = static_cast<std::size_t>(n);
  for (long long i = 0; i < k; ++i) {
    const std::size_t lineno = static_cast<std::size_t>(i) + 2;
    if (lineno > lines.size()) throw ParseError(lines.size() + 1, "missing biclique line");
    const std::string& line = lines[lineno - 1];
    const std::size_t semi = line.find(';');
    if (semi == std::string::npos)
      throw ParseError(lineno, "expected 'L: ... ; R: ...'");
    std::string ls = line.substr(0, semi), rs = line.substr(semi + 1);
    auto strip_tag = [&](std::string s, const char* tag) {
      const std::size_t at = s.find(tag);
      if (at == std::string::npos) throw ParseError(lineno, std::string("missing '") + tag + "'");
      return s.substr(at + 2);
    };
    OrientedBiclique b;
    b.left = parse_vertex_list(strip_tag(ls, "L:"), f.n_vertices, lineno);
    b.right = parse_vertex_list(strip_tag(rs, "R:"), f.n_vertices, lineno);
    f.bicliques.push_back(std::move(b));
  }
  return f;
}

std::string format_bcp(const BicliqueFile& f) {
  std::string out =
      "bcp v1 " + std::to_string(f.n_vertices) + " " + std::to_string(f.bicliques.size()) + "\n";
  for (const auto& b : f.bicliques) {
    out += "L:";
    for (std::size_t v : b.left) out += " " + std::to_string(v + 1);
    out += " ; R:";
    for (std::size_t v : b.right) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace pcc
