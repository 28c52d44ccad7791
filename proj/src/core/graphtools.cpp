#include "core/graphtools.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "core/budget.hpp"

namespace pcc {

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-24) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-15) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

namespace {

constexpr double kZeroTol = 1e-9;

int inertia_bound(const std::vector<std::vector<double>>& adj) {
  const auto eig = symmetric_eigenvalues(adj);
  int pos = 0, neg = 0;
  for (double v : eig) {
    if (v > kZeroTol) ++pos;
    if (v < -kZeroTol) ++neg;
  }
  return std::max(pos, neg);
}

}  // namespace

int bp_spectral_lower_bound(const LabeledGraph& g) {
  std::vector<std::vector<double>> adj(g.n, std::vector<double>(g.n, 0.0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1.0;
  return inertia_bound(adj);
}

// ---------------------------------------------------------------------------
// chromatic number
// ---------------------------------------------------------------------------

namespace {

struct ChiSearch {
  const std::vector<BitSet>& adj;
  std::size_t n;
  int k = 0;
  std::vector<int> colors;
  std::vector<std::size_t> degree;

  bool extend(std::size_t colored, int used) {
    if (colored == n) return true;
    budget::tick();
    // DSATUR pivot: max saturation, then max degree, then min index
    std::size_t pick = n;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] >= 0) continue;
      std::uint64_t mask = 0;
      adj[v].for_each([&](std::size_t u) {
        if (colors[u] >= 0) mask |= std::uint64_t{1} << colors[u];
      });
      const std::size_t sat = static_cast<std::size_t>(std::popcount(mask));
      if (pick == n || sat > best_sat || (sat == best_sat && degree[v] > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = degree[v];
      }
    }
    const int cap = std::min(k, used + 1);
    for (int c = 0; c < cap; ++c) {
      bool clash = false;
      adj[pick].for_each([&](std::size_t u) { clash |= colors[u] == c; });
      if (clash) continue;
      colors[pick] = c;
      if (extend(colored + 1, std::max(used, c + 1))) return true;
      colors[pick] = -1;
    }
    return false;
  }
};

std::vector<std::size_t> greedy_clique(const std::vector<BitSet>& adj, std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  std::vector<std::size_t> clique;
  for (std::size_t v : order) {
    bool ok = true;
    for (std::size_t u : clique) ok = ok && adj[v].test(u);
    if (ok) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

std::vector<int> dsatur_coloring(const std::vector<BitSet>& adj, std::size_t n) {
  std::vector<int> colors(n, -1);
  std::vector<std::size_t> deg(n);
  for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n, best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (colors[v] >= 0) continue;
      std::uint64_t mask = 0;
      adj[v].for_each([&](std::size_t u) {
        if (colors[u] >= 0) mask |= std::uint64_t{1} << colors[u];
      });
      const std::size_t sat = static_cast<std::size_t>(std::popcount(mask));
      if (pick == n || sat > best_sat || (sat == best_sat && deg[v] > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg[v];
      }
    }
    int c = 0;
    for (;; ++c) {
      bool clash = false;
      adj[pick].for_each([&](std::size_t u) { clash |= colors[u] == c; });
      if (!clash) break;
    }
    colors[pick] = c;
  }
  return colors;
}

}  // namespace

ColoringResult chromatic_number(const LabeledGraph& g, bool force) {
  if (!force && g.n > 80)
    throw GuardExceeded("chromatic_number: " + std::to_string(g.n) +
                        " vertices exceed the n<=80 guard, pass force");
  if (g.n == 0) return {0, {}};
  const auto adj = g.adjacency();
  if (g.edges.empty()) return {1, std::vector<int>(g.n, 0)};

  const auto clique = greedy_clique(adj, g.n);
  const auto greedy = dsatur_coloring(adj, g.n);
  const int ub = 1 + *std::max_element(greedy.begin(), greedy.end());
  const int lb = static_cast<int>(clique.size());

  std::vector<std::size_t> degree(g.n);
  for (std::size_t v = 0; v < g.n; ++v) degree[v] = adj[v].count();

  for (int k = lb; k < ub; ++k) {
    ChiSearch s{adj, g.n, k, std::vector<int>(g.n, -1), degree};
    // pin the clique: its vertices need pairwise distinct colors anyway
    for (std::size_t i = 0; i < clique.size(); ++i) s.colors[clique[i]] = static_cast<int>(i);
    if (s.extend(clique.size(), static_cast<int>(clique.size()))) return {k, s.colors};
  }
  return {ub, greedy};
}

// ---------------------------------------------------------------------------
// biclique partition number
// ---------------------------------------------------------------------------

namespace {

struct BpSearch {
  const LabeledGraph& g;
  std::vector<BitSet> adj;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> edge_index;  // vertex pair -> edge id

  int best = 0;
  std::vector<OrientedBiclique> best_partition;
  std::vector<OrientedBiclique> current;

  std::size_t eid(std::size_t u, std::size_t v) const {
    return edge_index[std::min(u, v)][std::max(u, v)];
  }

  std::vector<BitSet> adj_uncovered(std::uint64_t uncovered) const {
    std::vector<BitSet> a(g.n, BitSet(g.n));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if ((uncovered >> e) & 1) {
        a[edges[e].first].set(edges[e].second);
        a[edges[e].second].set(edges[e].first);
      }
    }
    return a;
  }

  int lower_bound(std::uint64_t uncovered) const {
    if (!uncovered) return 0;
    std::vector<std::size_t> verts;
    std::vector<std::size_t> vid(g.n, g.n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((uncovered >> e) & 1)) continue;
      for (std::size_t w : {edges[e].first, edges[e].second}) {
        if (vid[w] == g.n) {
          vid[w] = verts.size();
          verts.push_back(w);
        }
      }
    }
    std::vector<std::vector<double>> a(verts.size(), std::vector<double>(verts.size(), 0.0));
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!((uncovered >> e) & 1)) continue;
      const std::size_t u = vid[edges[e].first], v = vid[edges[e].second];
      a[u][v] = a[v][u] = 1.0;
    }
    return std::max(1, inertia_bound(a));
  }

  void dfs(std::uint64_t uncovered, int used) {
    if (!uncovered) {
      best = used;
      best_partition = current;
      return;
    }
    if (used + lower_bound(uncovered) >= best) return;
    budget::tick();

    const std::size_t pivot = static_cast<std::size_t>(std::countr_zero(uncovered));
    const auto [u, v] = edges[pivot];
    const auto unc_adj = adj_uncovered(uncovered);

    // all bicliques L x R with u in L, v in R whose edges are uncovered
    std::vector<std::size_t> lcand = unc_adj[v].to_indices();
    lcand.erase(std::remove(lcand.begin(), lcand.end(), u), lcand.end());

    struct Cand {
      std::uint64_t mask;
      OrientedBiclique bc;
    };
    std::vector<Cand> cands;
    const std::size_t lc = lcand.size();
    for (std::uint64_t lsel = 0; lsel < (std::uint64_t{1} << lc); ++lsel) {
      budget::tick();
      std::vector<std::size_t> left{u};
      for (std::size_t i = 0; i < lc; ++i)
        if ((lsel >> i) & 1) left.push_back(lcand[i]);
      BitSet rbase = unc_adj[left[0]];
      for (std::size_t i = 1; i < left.size(); ++i) rbase.intersect(unc_adj[left[i]]);
      if (!rbase.test(v)) continue;
      std::vector<std::size_t> rcand = rbase.to_indices();
      rcand.erase(std::remove(rcand.begin(), rcand.end(), v), rcand.end());
      const std::size_t rc = rcand.size();
      for (std::uint64_t rsel = 0; rsel < (std::uint64_t{1} << rc); ++rsel) {
        std::vector<std::size_t> right{v};
        for (std::size_t i = 0; i < rc; ++i)
          if ((rsel >> i) & 1) right.push_back(rcand[i]);
        std::uint64_t mask = 0;
        for (std::size_t x : left)
          for (std::size_t y : right) mask |= std::uint64_t{1} << eid(x, y);
        OrientedBiclique bc{left, right};
        std::sort(bc.left.begin(), bc.left.end());
        std::sort(bc.right.begin(), bc.right.end());
        cands.push_back({mask, std::move(bc)});
      }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      const int pa = std::popcount(a.mask), pb = std::popcount(b.mask);
      if (pa != pb) return pa > pb;
      return a.mask < b.mask;
    });
    for (const Cand& cand : cands) {
      current.push_back(cand.bc);
      dfs(uncovered & ~cand.mask, used + 1);
      current.pop_back();
    }
  }
};

}  // namespace

BpResult biclique_partition_number(const LabeledGraph& g, bool force) {
  if (!force && g.edges.size() > 40)
    throw GuardExceeded("biclique_partition_number: " + std::to_string(g.edges.size()) +
                        " edges exceed the 40-edge guard, pass force");
  if (g.edges.empty()) return {0, {}};

  BpSearch s{g, g.adjacency(), g.edges, {}, 0, {}, {}};
  s.edge_index.assign(g.n, std::vector<std::size_t>(g.n, 0));
  for (std::size_t e = 0; e < g.edges.size(); ++e)
    s.edge_index[g.edges[e].first][g.edges[e].second] = e;

  // greedy star partition: upper bound and first incumbent
  {
    std::uint64_t uncovered = (g.edges.size() == 64)
                                  ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << g.edges.size()) - 1;
    std::vector<OrientedBiclique> part;
    for (std::size_t v = 0; v < g.n && uncovered; ++v) {
      std::vector<std::size_t> nbrs;
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (!((uncovered >> e) & 1)) continue;
        if (g.edges[e].first == v) nbrs.push_back(g.edges[e].second);
        if (g.edges[e].second == v) nbrs.push_back(g.edges[e].first);
      }
      if (nbrs.empty()) continue;
      std::sort(nbrs.begin(), nbrs.end());
      for (std::size_t w : nbrs) uncovered &= ~(std::uint64_t{1} << s.eid(v, w));
      part.push_back({{v}, nbrs});
    }
    s.best = static_cast<int>(part.size());
    s.best_partition = std::move(part);
  }

  const std::uint64_t all = (g.edges.size() == 64) ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << g.edges.size()) - 1;
  s.dfs(all, 0);
  return {s.best, s.best_partition};
}

FamilyMode family_mode_from_string(const std::string& s) {
  if (s == "partition") return FamilyMode::Partition;
  if (s == "cover") return FamilyMode::Cover;
  if (s == "cover-le-2") return FamilyMode::CoverLe2;
  throw InvalidArgument("unknown biclique family mode '" + s + "'");
}

FamilyCheck validate_biclique_family(const LabeledGraph& g,
                                     const std::vector<OrientedBiclique>& family,
                                     FamilyMode mode) {
  const auto adj = g.adjacency();
  std::vector<std::vector<int>> covered(g.n, std::vector<int>(g.n, 0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& b = family[i];
    for (std::size_t x : b.left) {
      if (x >= g.n) return {false, "biclique " + std::to_string(i + 1) + ": vertex out of range", {}};
      for (std::size_t y : b.right) {
        if (y >= g.n)
          return {false, "biclique " + std::to_string(i + 1) + ": vertex out of range", {}};
        if (x == y)
          return {false, "biclique " + std::to_string(i + 1) + ": sides intersect",
                  std::make_pair(x, y)};
        if (!adj[x].test(y))
          return {false, "biclique " + std::to_string(i + 1) + ": pair is not an edge",
                  std::make_pair(std::min(x, y), std::max(x, y))};
        ++covered[std::min(x, y)][std::max(x, y)];
      }
    }
  }
  for (auto [u, v] : g.edges) {
    const int c = covered[u][v];
    const bool ok = mode == FamilyMode::Partition ? c == 1
                    : mode == FamilyMode::Cover   ? c >= 1
                                                  : (c >= 1 && c <= 2);
    if (!ok)
      return {false, "edge covered " + std::to_string(c) + " times", std::make_pair(u, v)};
  }
  return {true, "", {}};
}

}  // namespace pcc
