#include "core/report.hpp"

namespace pcc {

ordered_json shattered_set_json(const ShatteredSetWitness& w, int dim) {
  ordered_json j;
  j["dimension"] = dim;
  j["kind"] = "vc";
  ordered_json pts = ordered_json::array();
  for (std::size_t p : w.points) pts.push_back(p + 1);
  j["points"] = std::move(pts);
  ordered_json rs;
  for (const auto& [pat, row] : w.realizers) rs[pat] = row + 1;
  j["realizers"] = std::move(rs);
  return j;
}

ordered_json shattered_tree_json(const ShatteredTreeWitness& w) {
  ordered_json j;
  j["dimension"] = w.depth;
  j["kind"] = "ld";
  ordered_json pts;
  for (const auto& [node, point] : w.node_labels) pts[node] = point + 1;
  j["points"] = std::move(pts);
  ordered_json rs;
  for (const auto& [leaf, row] : w.leaf_realizers) rs[leaf] = row + 1;
  j["realizers"] = std::move(rs);
  return j;
}

ordered_json soa_trace_json(const SoaTrace& t) {
  ordered_json j;
  ordered_json order = ordered_json::array();
  for (std::size_t p : t.order) order.push_back(p + 1);
  j["order"] = std::move(order);
  ordered_json steps = ordered_json::array();
  for (const auto& s : t.steps) {
    ordered_json e;
    e["point"] = s.point + 1;
    e["prefix"] = s.prefix;
    e["chosen"] = s.chosen;
    e["reason"] = soa_reason_name(s.reason);
    steps.push_back(std::move(e));
  }
  j["steps"] = std::move(steps);
  j["output_pcc"] = format_pcc(t.output);
  return j;
}

ordered_json pattern_witness_json(const PatternWitness& w) {
  ordered_json j;
  ordered_json rows = ordered_json::array(), cols = ordered_json::array();
  for (std::size_t r : w.rows) rows.push_back(r + 1);
  for (std::size_t c : w.cols) cols.push_back(c + 1);
  j["rows"] = std::move(rows);
  j["cols"] = std::move(cols);
  return j;
}

ordered_json coloring_json(const ColoringResult& c) {
  ordered_json j;
  j["chi"] = c.chi;
  ordered_json colors = ordered_json::array();
  for (int v : c.colors) colors.push_back(v + 1);
  j["colors"] = std::move(colors);
  return j;
}

ordered_json bicliques_json(const std::vector<OrientedBiclique>& bs) {
  ordered_json arr = ordered_json::array();
  for (const auto& b : bs) {
    ordered_json e;
    ordered_json left = ordered_json::array(), right = ordered_json::array();
    for (std::size_t v : b.left) left.push_back(v + 1);
    for (std::size_t v : b.right) right.push_back(v + 1);
    e["left"] = std::move(left);
    e["right"] = std::move(right);
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json rectangles_json(const std::vector<Rectangle>& rs) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json e;
    ordered_json rows = ordered_json::array(), cols = ordered_json::array();
    for (std::size_t v : r.rows) rows.push_back(v + 1);
    for (std::size_t v : r.cols) cols.push_back(v + 1);
    e["rows"] = std::move(rows);
    e["cols"] = std::move(cols);
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json ass_report_json(const AssReport& r) {
  ordered_json j;
  j["c"] = r.c;
  j["m"] = r.m;
  j["chi_out"] = r.chi_out;
  j["bp_size"] = r.bp_size;
  j["branch"] = r.branch;
  return j;
}

ordered_json growth_json(const std::vector<GrowthPoint>& g) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : g) {
    ordered_json e;
    e["k"] = p.k;
    e["max_distinct"] = p.max_distinct;
    arr.push_back(std::move(e));
  }
  return arr;
}

}  // namespace pcc
