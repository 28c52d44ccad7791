#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <climits>
#include <set>

#include "core/graphtools.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"

using namespace pcc;

namespace {

LabeledGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, std::move(edges));
}

bool coloring_proper(const LabeledGraph& g, const ColoringResult& c) {
  if (c.colors.size() != g.n) return false;
  int used = 0;
  for (int v : c.colors) {
    if (v < 0 || v >= c.chi) return false;
    used = std::max(used, v + 1);
  }
  if (g.n > 0 && used != c.chi) return false;
  for (auto [u, v] : g.edges)
    if (c.colors[u] == c.colors[v]) return false;
  return true;
}

// exact maximum clique by subset enumeration, test-side oracle
std::size_t clique_number(const LabeledGraph& g) {
  const auto adj = g.adjacency();
  std::size_t best = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n); ++s) {
    std::vector<std::size_t> verts;
    for (std::size_t v = 0; v < g.n; ++v)
      if ((s >> v) & 1) verts.push_back(v);
    bool ok = true;
    for (std::size_t i = 0; i < verts.size() && ok; ++i)
      for (std::size_t j = i + 1; j < verts.size() && ok; ++j)
        ok = adj[verts[i]].test(verts[j]);
    if (ok) best = std::max(best, verts.size());
  }
  return best;
}

}  // namespace

TEST_CASE("graph parsing and dot export") {
  const LabeledGraph g = parse_graph("graph v1 4 2\n1 2\n3 4\n");
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 2);
  CHECK(format_graph(g) == "graph v1 4 2\n1 2\n3 4\n");
  const std::string dot = to_dot(g);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("graph G {") == 0);

  CHECK_THROWS_WITH_AS(parse_graph("graph v2 1 0\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph v1 2 1\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph v1 2 2\n1 2\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_graph("graph v1 2 1\n1 3\n"), ParseError);
}

TEST_CASE("bcp parsing") {
  const BicliqueFile f = parse_bcp("bcp v1 3 2\nL: 1 ; R: 2 3\nL: 2 ; R: 3\n");
  CHECK(f.n_vertices == 3);
  REQUIRE(f.bicliques.size() == 2);
  CHECK(f.bicliques[0].left == std::vector<std::size_t>{0});
  CHECK(f.bicliques[0].right == std::vector<std::size_t>{1, 2});
  CHECK(format_bcp(f) == "bcp v1 3 2\nL: 1 ; R: 2 3\nL: 2 ; R: 3\n");
  CHECK_THROWS_AS(parse_bcp("bcp v1 3 1\nL: 1 R: 2\n"), ParseError);
}

TEST_CASE("chromatic number on known graphs") {
  CHECK(chromatic_number(LabeledGraph{}).chi == 0);
  CHECK(chromatic_number(make_graph(3, {})).chi == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    const ColoringResult c = chromatic_number(complete_graph(n));
    CHECK(c.chi == static_cast<int>(n));
    CHECK(coloring_proper(complete_graph(n), c));
  }
  CHECK(chromatic_number(cycle(5)).chi == 3);
  CHECK(chromatic_number(cycle(6)).chi == 2);

  // Petersen graph
  const LabeledGraph petersen = make_graph(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
  const ColoringResult pc = chromatic_number(petersen);
  CHECK(pc.chi == 3);
  CHECK(coloring_proper(petersen, pc));

  LabeledGraph big;
  big.n = 81;
  CHECK_THROWS_AS(chromatic_number(big), GuardExceeded);
  CHECK(chromatic_number(big, true).chi == 1);
}

TEST_CASE("biclique partition number on known graphs") {
  CHECK(biclique_partition_number(make_graph(3, {})).bp == 0);
  CHECK(biclique_partition_number(complete_graph(2)).bp == 1);
  for (std::size_t n = 2; n <= 6; ++n) {
    const BpResult r = biclique_partition_number(complete_graph(n));
    CHECK(r.bp == static_cast<int>(n) - 1);
    CHECK(validate_biclique_family(complete_graph(n), r.partition, FamilyMode::Partition).ok);
  }
  // C4 is itself complete bipartite
  CHECK(biclique_partition_number(cycle(4)).bp == 1);
  // path on 3 vertices is a star
  CHECK(biclique_partition_number(make_graph(3, {{0, 1}, {1, 2}})).bp == 1);

  LabeledGraph big = complete_graph(10);  // 45 edges
  CHECK_THROWS_AS(biclique_partition_number(big), GuardExceeded);
}

TEST_CASE("spectral bound") {
  CHECK(bp_spectral_lower_bound(complete_graph(4)) == 3);
  CHECK(bp_spectral_lower_bound(make_graph(3, {})) == 0);
  CHECK(bp_spectral_lower_bound(cycle(4)) == 1);
}

TEST_CASE("family validation modes") {
  const LabeledGraph k3 = complete_graph(3);
  const std::vector<OrientedBiclique> stars{{{0}, {1, 2}}, {{1}, {2}}};
  CHECK(validate_biclique_family(k3, stars, FamilyMode::Partition).ok);
  CHECK(validate_biclique_family(k3, stars, FamilyMode::CoverLe2).ok);
  CHECK(validate_biclique_family(k3, stars, FamilyMode::Cover).ok);

  const std::vector<OrientedBiclique> doubled{{{0}, {1, 2}}, {{1}, {0, 2}}};
  const FamilyCheck bad = validate_biclique_family(k3, doubled, FamilyMode::Partition);
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.edge.has_value());
  CHECK(*bad.edge == std::make_pair(std::size_t{0}, std::size_t{1}));
  CHECK(validate_biclique_family(k3, doubled, FamilyMode::CoverLe2).ok);

  const std::vector<OrientedBiclique> nonedge{{{0}, {1, 2}}, {{1}, {2}}, {{2}, {0}}};
  CHECK_FALSE(validate_biclique_family(k3, nonedge, FamilyMode::Partition).ok);
}

namespace {

// independent chromatic oracle: try every assignment of k colors, k = 1..n
int brute_chi(const LabeledGraph& g) {
  if (g.n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> colors(g.n, 0);
    for (;;) {
      bool proper = true;
      for (auto [u, v] : g.edges) proper = proper && colors[u] != colors[v];
      if (proper) return k;
      std::size_t i = 0;
      while (i < g.n && colors[i] == k - 1) colors[i++] = 0;
      if (i == g.n) break;
      ++colors[i];
    }
  }
}

// independent bp oracle: subset DP over edge masks with every biclique mask
int brute_bp(const LabeledGraph& g) {
  const std::size_t m = g.edges.size();
  if (m == 0) return 0;
  std::vector<std::vector<std::size_t>> eid(g.n, std::vector<std::size_t>(g.n, 0));
  for (std::size_t e = 0; e < m; ++e)
    eid[g.edges[e].first][g.edges[e].second] = eid[g.edges[e].second][g.edges[e].first] = e;
  const auto adj = g.adjacency();

  // every oriented biclique (L, R) as an edge mask, deduplicated
  std::set<std::uint32_t> masks;
  for (std::uint32_t ls = 1; ls < (std::uint32_t{1} << g.n); ++ls)
    for (std::uint32_t rs = 1; rs < (std::uint32_t{1} << g.n); ++rs) {
      if (ls & rs) continue;
      bool complete = true;
      std::uint32_t mask = 0;
      for (std::size_t u = 0; u < g.n && complete; ++u) {
        if (!((ls >> u) & 1)) continue;
        for (std::size_t v = 0; v < g.n && complete; ++v) {
          if (!((rs >> v) & 1)) continue;
          if (!adj[u].test(v))
            complete = false;
          else
            mask |= std::uint32_t{1} << eid[u][v];
        }
      }
      if (complete && mask) masks.insert(mask);
    }

  const std::uint32_t full = (std::uint32_t{1} << m) - 1;
  std::vector<int> dp(full + 1, INT_MAX);
  dp[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    for (std::uint32_t b : masks) {
      if ((b & s) != b || !(b & low)) continue;
      if (dp[s ^ b] != INT_MAX) dp[s] = std::min(dp[s], dp[s ^ b] + 1);
    }
  }
  return dp[full];
}

}  // namespace

TEST_CASE("solvers agree with brute-force oracles on tiny graphs") {
  Rng rng(42);
  int checked = 0;
  while (checked < 20) {
    const LabeledGraph g = gen_random_graph(rng, 5, 0.5);
    if (g.edges.size() > 8) continue;
    ++checked;
    CHECK(chromatic_number(g).chi == brute_chi(g));
    CHECK(biclique_partition_number(g).bp == brute_bp(g));
  }
}

TEST_CASE("random graphs: bounds, witnesses, determinism") {
  Rng rng(41);
  for (int t = 0; t < 25; ++t) {
    const LabeledGraph g = gen_random_graph(rng, 7, 0.5);
    const ColoringResult c = chromatic_number(g);
    CHECK(coloring_proper(g, c));
    CHECK(static_cast<std::size_t>(c.chi) >= clique_number(g));

    const BpResult bp = biclique_partition_number(g);
    CHECK(validate_biclique_family(g, bp.partition, FamilyMode::Partition).ok);
    CHECK(bp_spectral_lower_bound(g) <= bp.bp);

    CHECK(chromatic_number(g).chi == c.chi);
    CHECK(biclique_partition_number(g).bp == bp.bp);
  }
}
