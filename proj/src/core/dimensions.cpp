#include "core/dimensions.hpp"

#include <algorithm>
#include <bit>

#include "core/bits.hpp"
#include "core/budget.hpp"

namespace pcc {

namespace {

struct PointMasks {
  std::vector<BitSet> zero, one;  // per point, over concept rows
};

PointMasks build_masks(const PartialMatrix& m) {
  PointMasks pm;
  pm.zero.assign(m.n_points, BitSet(m.n_concepts()));
  pm.one.assign(m.n_points, BitSet(m.n_concepts()));
  for (std::size_t r = 0; r < m.n_concepts(); ++r)
    for (std::size_t p = 0; p < m.n_points; ++p) {
      if (m.rows[r][p] == Cell::Zero) pm.zero[p].set(r);
      if (m.rows[r][p] == Cell::One) pm.one[p].set(r);
    }
  return pm;
}

struct VcSearch {
  const PointMasks& pm;
  std::vector<std::size_t> candidates;
  std::vector<std::size_t> best_points;
  std::vector<BitSet> best_patterns;
  std::vector<std::size_t> cur_points;

  // pats[i] holds the rows realizing pattern i; bit (s-1-j) of i is the value
  // at cur_points[j].
  void dfs(std::size_t next, const std::vector<BitSet>& pats) {
    if (cur_points.size() > best_points.size()) {
      best_points = cur_points;
      best_patterns = pats;
    }
    for (std::size_t i = next; i < candidates.size(); ++i) {
      if (cur_points.size() + (candidates.size() - i) <= best_points.size()) return;
      budget::tick();
      const std::size_t p = candidates[i];
      std::vector<BitSet> ext;
      ext.reserve(pats.size() * 2);
      bool ok = true;
      for (const BitSet& b : pats) {
        BitSet b0 = b.and_with(pm.zero[p]);
        BitSet b1 = b.and_with(pm.one[p]);
        if (!b0.any() || !b1.any()) {
          ok = false;
          break;
        }
        ext.push_back(std::move(b0));
        ext.push_back(std::move(b1));
      }
      if (!ok) continue;
      cur_points.push_back(p);
      dfs(i + 1, ext);
      cur_points.pop_back();
    }
  }
};

}  // namespace

VcResult vc_dim(const PartialMatrix& m) {
  if (m.rows.empty()) throw InvalidArgument("vc_dim: undefined for empty class");
  const PointMasks pm = build_masks(m);
  VcSearch s{pm, {}, {}, {}, {}};
  for (std::size_t p = 0; p < m.n_points; ++p)
    if (pm.zero[p].any() && pm.one[p].any()) s.candidates.push_back(p);

  BitSet all(m.n_concepts());
  for (std::size_t r = 0; r < m.n_concepts(); ++r) all.set(r);
  std::vector<BitSet> root{all};
  s.best_patterns = root;
  s.dfs(0, root);

  VcResult res;
  res.dim = static_cast<int>(s.best_points.size());
  res.witness.points = s.best_points;
  const std::size_t d = s.best_points.size();
  for (std::size_t idx = 0; idx < s.best_patterns.size(); ++idx) {
    std::string key(d, '0');
    for (std::size_t j = 0; j < d; ++j)
      if ((idx >> (d - 1 - j)) & 1) key[j] = '1';
    res.witness.realizers[key] = s.best_patterns[idx].first();
  }
  return res;
}

bool validate_shattered_set(const PartialMatrix& m, const ShatteredSetWitness& w) {
  const std::size_t d = w.points.size();
  if (d > 63) return false;
  if (w.realizers.size() != (std::size_t{1} << d)) return false;
  for (std::size_t p : w.points)
    if (p >= m.n_points) return false;
  for (const auto& [key, row] : w.realizers) {
    if (key.size() != d || row >= m.n_concepts()) return false;
    for (std::size_t j = 0; j < d; ++j) {
      const Cell c = m.rows[row][w.points[j]];
      if (c == Cell::Star) return false;
      if ((c == Cell::One) != (key[j] == '1')) return false;
    }
  }
  return true;
}

namespace {

// Canonical form for memoization: distinct rows projected to columns that
// still carry both a 0 and a 1 (other columns can never head a positive
// branch), with columns then rows sorted. Equal keys imply the classes differ
// only by row/column permutation, which preserves LD.
struct CanonClass {
  std::size_t n_cols = 0;
  std::vector<std::string> rows;  // sorted, distinct
};

CanonClass canonicalize(const std::vector<std::string>& raw_rows, std::size_t n_cols) {
  std::vector<std::string> rows = raw_rows;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < n_cols; ++c) {
    bool has0 = false, has1 = false;
    for (const auto& r : rows) {
      has0 |= r[c] == '0';
      has1 |= r[c] == '1';
    }
    if (has0 && has1) keep.push_back(c);
  }

  std::vector<std::string> proj;
  proj.reserve(rows.size());
  for (const auto& r : rows) {
    std::string s(keep.size(), '0');
    for (std::size_t j = 0; j < keep.size(); ++j) s[j] = r[keep[j]];
    proj.push_back(std::move(s));
  }
  std::sort(proj.begin(), proj.end());
  proj.erase(std::unique(proj.begin(), proj.end()), proj.end());

  // sort columns by their content down the sorted rows, then resort rows
  std::vector<std::size_t> order(keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    for (const auto& r : proj) {
      if (r[a] != r[b]) return r[a] < r[b];
    }
    return a < b;
  });
  CanonClass out;
  out.n_cols = keep.size();
  out.rows.reserve(proj.size());
  for (const auto& r : proj) {
    std::string s(order.size(), '0');
    for (std::size_t j = 0; j < order.size(); ++j) s[j] = r[order[j]];
    out.rows.push_back(std::move(s));
  }
  std::sort(out.rows.begin(), out.rows.end());
  out.rows.erase(std::unique(out.rows.begin(), out.rows.end()), out.rows.end());
  return out;
}

std::string canon_key(const CanonClass& c) {
  std::string key = std::to_string(c.n_cols);
  for (const auto& r : c.rows) {
    key.push_back('\n');
    key += r;
  }
  return key;
}

int floor_log2(std::size_t v) { return 63 - std::countl_zero(static_cast<std::uint64_t>(v)); }

int ld_rec(const CanonClass& cls, LdMemo& memo) {
  if (cls.rows.empty()) return -1;
  if (cls.n_cols == 0 || cls.rows.size() == 1) return 0;
  const std::string key = canon_key(cls);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

  // each row realizes at most one leaf of a shattered tree
  const int ub = std::min<int>(floor_log2(cls.rows.size()), static_cast<int>(cls.n_cols));
  int best = 0;
  for (std::size_t c = 0; c < cls.n_cols && best < ub; ++c) {
    budget::tick();
    std::vector<std::string> sub0, sub1;
    for (const auto& r : cls.rows) {
      if (r[c] == '*') continue;
      std::string s = r;
      s.erase(s.begin() + static_cast<std::ptrdiff_t>(c));
      (r[c] == '0' ? sub0 : sub1).push_back(std::move(s));
    }
    if (sub0.empty() || sub1.empty()) continue;
    const int l0 = ld_rec(canonicalize(sub0, cls.n_cols - 1), memo);
    const int l1 = ld_rec(canonicalize(sub1, cls.n_cols - 1), memo);
    best = std::max(best, 1 + std::min(l0, l1));
  }
  memo.table.emplace(key, best);
  return best;
}

}  // namespace

int ld_dim(const PartialMatrix& m, LdMemo& memo) {
  return ld_rec(canonicalize(row_strings(m), m.n_points), memo);
}

int ld_dim(const PartialMatrix& m) {
  LdMemo memo;
  return ld_dim(m, memo);
}

namespace {

struct TreeSearch {
  const PartialMatrix& m;
  ShatteredTreeWitness w;

  bool search(int depth, const std::vector<std::size_t>& rows, std::string& path) {
    if (depth == 0) {
      if (rows.empty()) return false;
      w.leaf_realizers[path] = rows.front();
      return true;
    }
    for (std::size_t x = 0; x < m.n_points; ++x) {
      budget::tick();
      std::vector<std::size_t> s0, s1;
      for (std::size_t r : rows) {
        if (m.rows[r][x] == Cell::Zero) s0.push_back(r);
        if (m.rows[r][x] == Cell::One) s1.push_back(r);
      }
      if (s0.empty() || s1.empty()) continue;
      w.node_labels[path] = x;
      path.push_back('0');
      const bool ok0 = search(depth - 1, s0, path);
      path.back() = '1';
      const bool ok1 = ok0 && search(depth - 1, s1, path);
      path.pop_back();
      if (ok0 && ok1) return true;
      erase_below(path);
    }
    return false;
  }

  void erase_below(const std::string& path) {
    auto in_subtree = [&](const std::string& k) {
      return k.size() >= path.size() && k.compare(0, path.size(), path) == 0;
    };
    for (auto it = w.node_labels.begin(); it != w.node_labels.end();)
      it = in_subtree(it->first) ? w.node_labels.erase(it) : std::next(it);
    for (auto it = w.leaf_realizers.begin(); it != w.leaf_realizers.end();)
      it = in_subtree(it->first) ? w.leaf_realizers.erase(it) : std::next(it);
  }
};

}  // namespace

LdOracleResult ld_dim_tree_oracle(const PartialMatrix& m, int d, bool force) {
  if (d < 0) throw InvalidArgument("ld_dim_tree_oracle: depth must be >= 0");
  if (!force && (m.n_points > 8 || m.n_concepts() > 64))
    throw GuardExceeded("ld_dim_tree_oracle: beyond 8 points / 64 concepts, pass force");
  TreeSearch ts{m, {}};
  ts.w.depth = d;
  std::vector<std::size_t> all(m.n_concepts());
  for (std::size_t r = 0; r < all.size(); ++r) all[r] = r;
  std::string path;
  LdOracleResult res;
  res.shattered = ts.search(d, all, path);
  if (res.shattered) res.witness = std::move(ts.w);
  return res;
}

bool validate_shattered_tree(const PartialMatrix& m, const ShatteredTreeWitness& w) {
  const std::size_t d = static_cast<std::size_t>(w.depth);
  if (w.depth < 0 || d > 62) return false;
  if (w.leaf_realizers.size() != (std::size_t{1} << d)) return false;
  for (std::size_t leaf = 0; leaf < (std::size_t{1} << d); ++leaf) {
    std::string y(d, '0');
    for (std::size_t i = 0; i < d; ++i)
      if ((leaf >> (d - 1 - i)) & 1) y[i] = '1';
    auto itr = w.leaf_realizers.find(y);
    if (itr == w.leaf_realizers.end() || itr->second >= m.n_concepts()) return false;
    const auto& row = m.rows[itr->second];
    for (std::size_t i = 0; i < d; ++i) {
      auto itn = w.node_labels.find(y.substr(0, i));
      if (itn == w.node_labels.end() || itn->second >= m.n_points) return false;
      const Cell c = row[itn->second];
      if (c == Cell::Star) return false;
      if ((c == Cell::One) != (y[i] == '1')) return false;
    }
  }
  return true;
}

DualVcResult dual_vc_check(const PartialMatrix& m) {
  if (m.rows.empty()) throw InvalidArgument("dual_vc_check: undefined for empty class");
  if (m.n_points == 0) throw InvalidArgument("dual_vc_check: dual of a class on 0 points is empty");
  DualVcResult res;
  res.vc = vc_dim(m).dim;
  res.dual_vc = vc_dim(dual(m)).dim;
  res.bound_holds = res.dual_vc <= (std::int64_t{1} << (res.vc + 1)) - 1;
  return res;
}

}  // namespace pcc
