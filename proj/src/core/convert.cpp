#include "core/convert.hpp"

#include <json.hpp>

#include "core/comm.hpp"
#include "core/graph.hpp"
#include "core/matrix.hpp"

namespace pcc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string first_token(const std::string& text) {
  std::size_t i = 0;
  while (i < text.size() && (text[i] == ' ' || text[i] == '\n' || text[i] == '\t' ||
                             text[i] == '\r'))
    ++i;
  std::size_t j = i;
  while (j < text.size() && text[j] != ' ' && text[j] != '\n' && text[j] != '\t' &&
         text[j] != '\r')
    ++j;
  return text.substr(i, j - i);
}

ordered_json matrix_to_json(const PartialMatrix& m) {
  ordered_json j;
  j["format"] = "pcc";
  j["n_points"] = m.n_points;
  j["rows"] = row_strings(m);
  return j;
}

PartialMatrix matrix_from_json(const ordered_json& j) {
  PartialMatrix m;
  m.n_points = j.at("n_points").get<std::size_t>();
  for (const auto& s : j.at("rows")) {
    const std::string row = s.get<std::string>();
    if (row.size() != m.n_points) throw InvalidArgument("json matrix row length mismatch");
    std::vector<Cell> cells(row.size());
    for (std::size_t i = 0; i < row.size(); ++i) cells[i] = cell_from_char(row[i]);
    m.rows.push_back(std::move(cells));
  }
  return m;
}

ordered_json comm_to_json(const CommMatrix& m) {
  ordered_json j;
  j["format"] = "comm";
  j["rows"] = m.n_rows;
  j["cols"] = m.n_cols;
  std::vector<std::string> lines;
  for (const auto& row : m.cells) {
    std::string s(row.size(), '0');
    for (std::size_t i = 0; i < row.size(); ++i) s[i] = row[i] ? '1' : '0';
    lines.push_back(std::move(s));
  }
  j["cells"] = lines;
  return j;
}

CommMatrix comm_from_json(const ordered_json& j) {
  std::string text = "comm v1 " + std::to_string(j.at("rows").get<std::size_t>()) + " " +
                     std::to_string(j.at("cols").get<std::size_t>()) + "\n";
  for (const auto& s : j.at("cells")) text += s.get<std::string>() + "\n";
  return parse_comm(text);
}

ordered_json graph_to_json(const LabeledGraph& g) {
  ordered_json j;
  j["format"] = "graph";
  j["n"] = g.n;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : g.edges) edges.push_back({u + 1, v + 1});
  j["edges"] = std::move(edges);
  return j;
}

LabeledGraph graph_from_json(const ordered_json& j) {
  const std::size_t n = j.at("n").get<std::size_t>();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : j.at("edges")) {
    const std::size_t u = e.at(0).get<std::size_t>(), v = e.at(1).get<std::size_t>();
    if (u < 1 || v < 1) throw InvalidArgument("json graph vertices are 1-indexed");
    edges.emplace_back(u - 1, v - 1);
  }
  return make_graph(n, std::move(edges));
}

ordered_json bf_to_json(const BoolFunction& f) {
  ordered_json j;
  j["format"] = "bf";
  j["n"] = f.n;
  std::string table(f.table.size(), '0');
  for (std::size_t i = 0; i < f.table.size(); ++i) table[i] = f.table[i] ? '1' : '0';
  j["table"] = table;
  return j;
}

ordered_json bcp_to_json(const BicliqueFile& f) {
  ordered_json j;
  j["format"] = "bcp";
  j["n_vertices"] = f.n_vertices;
  ordered_json bs = ordered_json::array();
  for (const auto& b : f.bicliques) {
    ordered_json e;
    ordered_json left = ordered_json::array(), right = ordered_json::array();
    for (std::size_t v : b.left) left.push_back(v + 1);
    for (std::size_t v : b.right) right.push_back(v + 1);
    e["left"] = std::move(left);
    e["right"] = std::move(right);
    bs.push_back(std::move(e));
  }
  j["bicliques"] = std::move(bs);
  return j;
}

BicliqueFile bcp_from_json(const ordered_json& j) {
  BicliqueFile f;
  f.n_vertices = j.at("n_vertices").get<std::size_t>();
  for (const auto& e : j.at("bicliques")) {
    OrientedBiclique b;
    for (const auto& v : e.at("left")) b.left.push_back(v.get<std::size_t>() - 1);
    for (const auto& v : e.at("right")) b.right.push_back(v.get<std::size_t>() - 1);
    f.bicliques.push_back(std::move(b));
  }
  return f;
}

}  // namespace

std::string detect_format(const std::string& text) {
  const std::string tok = first_token(text);
  if (tok == "pcc" || tok == "comm" || tok == "graph" || tok == "bf" || tok == "bcp") return tok;
  if (!tok.empty() && tok[0] == '{') return "json";
  throw ParseError(1, "unrecognized input format");
}

std::string convert(const std::string& input, const std::string& target) {
  const std::string from = detect_format(input);

  ordered_json j;
  std::string kind = from;
  if (from == "json") {
    try {
      j = ordered_json::parse(input);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, std::string("bad json: ") + e.what());
    }
    if (!j.contains("format")) throw ParseError(1, "json input lacks a 'format' field");
    kind = j.at("format").get<std::string>();
  } else if (from == "pcc") {
    j = matrix_to_json(parse_pcc(input));
  } else if (from == "comm") {
    j = comm_to_json(parse_comm(input));
  } else if (from == "graph") {
    j = graph_to_json(parse_graph(input));
  } else if (from == "bf") {
    j = bf_to_json(parse_bf(input));
  } else if (from == "bcp") {
    j = bcp_to_json(parse_bcp(input));
  }

  if (target == "json") return j.dump(2) + "\n";

  try {
    if (target == "pcc") {
      if (kind == "pcc") return format_pcc(matrix_from_json(j));
      if (kind == "comm") {
        const CommMatrix m = comm_from_json(j);
        PartialMatrix p;
        p.n_points = m.n_cols;
        for (const auto& row : m.cells) {
          std::vector<Cell> cells(row.size());
          for (std::size_t i = 0; i < row.size(); ++i)
            cells[i] = row[i] ? Cell::One : Cell::Zero;
          p.rows.push_back(std::move(cells));
        }
        return format_pcc(p);
      }
    } else if (target == "comm") {
      if (kind == "comm") return format_comm(comm_from_json(j));
      if (kind == "pcc") {
        const PartialMatrix p = matrix_from_json(j);
        const TotalMatrix t = to_total(p);  // Stars cannot convert
        CommMatrix m;
        m.n_rows = t.n_concepts();
        m.n_cols = t.n_points;
        m.cells = t.rows;
        return format_comm(m);
      }
    } else if (target == "graph") {
      if (kind == "graph") return format_graph(graph_from_json(j));
    } else if (target == "dot") {
      if (kind == "graph") return to_dot(graph_from_json(j));
    } else if (target == "bf") {
      if (kind == "bf")
        return format_bf(make_boolfun(j.at("n").get<unsigned>(), j.at("table").get<std::string>()));
    } else if (target == "bcp") {
      if (kind == "bcp") return format_bcp(bcp_from_json(j));
    } else {
      throw InvalidArgument("unknown target format '" + target + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, std::string("bad json payload: ") + e.what());
  }
  throw InvalidArgument("cannot convert " + kind + " to " + target);
}

}  // namespace pcc
