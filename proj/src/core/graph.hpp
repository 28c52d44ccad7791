#pragma once

#include <string>
#include <utility>
#include <vector>

#include "core/bits.hpp"
#include "core/errors.hpp"

namespace pcc {

// Simple undirected graph; edges stored with u < v, sorted and unique.
// Payloads are opaque per-vertex strings carried through the solvers.
struct LabeledGraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::string> payloads;  // empty or one per vertex

  std::size_t n_edges() const { return edges.size(); }
  std::vector<BitSet> adjacency() const;
};

// Normalizes edge order; rejects loops, duplicates and out-of-range vertices.
LabeledGraph make_graph(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> edges);

LabeledGraph complete_graph(std::size_t n);

// Text format: header "graph v1 <n> <m>", then one "u v" line per edge,
// 1-indexed.
LabeledGraph parse_graph(const std::string& text);
std::string format_graph(const LabeledGraph& g);
std::string to_dot(const LabeledGraph& g);

// Biclique with a fixed orientation left x right.
struct OrientedBiclique {
  std::vector<std::size_t> left, right;
};

struct BicliqueFile {
  std::size_t n_vertices = 0;
  std::vector<OrientedBiclique> bicliques;
};

// Text format: header "bcp v1 <n_vertices> <n_bicliques>", then per biclique
// one line "L: i1 i2 ... ; R: j1 j2 ..." with 1-indexed vertices.
BicliqueFile parse_bcp(const std::string& text);
std::string format_bcp(const BicliqueFile& f);

}  // namespace pcc
