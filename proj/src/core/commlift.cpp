#include "core/commlift.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "core/bits.hpp"
#include "core/budget.hpp"
#include "core/graphtools.hpp"

namespace pcc {

std::uint64_t isqrt_ceil(std::uint64_t v) {
  std::uint64_t s = 0;
  while (s * s < v) ++s;
  return s;
}

// ---------------------------------------------------------------------------
// certificate complexity
// ---------------------------------------------------------------------------

CertResult cert_complexity(const BoolFunction& f, int b, bool force) {
  if (b != 0 && b != 1) throw InvalidArgument("cert_complexity: b must be 0 or 1");
  if (!force && f.n > 16)
    throw GuardExceeded("cert_complexity: arity beyond 16, pass force");
  std::vector<std::uint32_t> inputs, counter;
  for (std::uint32_t x = 0; x < f.table.size(); ++x)
    (f.table[x] == b ? inputs : counter).push_back(x);
  if (inputs.empty()) return {0, std::nullopt};

  // subsets of [n] ordered smallest-first
  std::vector<std::uint32_t> subsets(std::size_t{1} << f.n);
  std::iota(subsets.begin(), subsets.end(), 0u);
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b2) {
    return std::popcount(a) < std::popcount(b2);
  });

  CertResult res{0, std::nullopt};
  for (std::uint32_t x : inputs) {
    int cer = static_cast<int>(f.n);
    for (std::uint32_t s : subsets) {
      budget::tick();
      // s certifies x iff it hits every coordinate-difference with a counterexample
      bool cert = true;
      for (std::uint32_t y : counter) {
        if (((x ^ y) & s) == 0) {
          cert = false;
          break;
        }
      }
      if (cert) {
        cer = std::popcount(s);
        break;
      }
    }
    if (!res.worst || cer > res.cer) {
      res.cer = cer;
      res.worst = x;
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// unambiguous certificates
// ---------------------------------------------------------------------------

UcMode uc_mode_from_string(const std::string& s) {
  if (s == "partition") return UcMode::Partition;
  if (s == "distinct") return UcMode::Distinct;
  throw InvalidArgument("unknown unambiguity mode '" + s + "'");
}

namespace {

bool consistent_with(std::uint32_t x, unsigned n, const std::vector<Cell>& rho) {
  for (unsigned j = 0; j < n; ++j) {
    if (rho[j] == Cell::Star) continue;
    if (BoolFunction::bit(x, n, j) != (rho[j] == Cell::One ? 1 : 0)) return false;
  }
  return true;
}

bool is_certificate(const BoolFunction& f, int b, const std::vector<Cell>& rho) {
  for (std::uint32_t y = 0; y < f.table.size(); ++y)
    if (consistent_with(y, f.n, rho) && f.table[y] != b) return false;
  return true;
}

// subcubes intersect iff no coordinate is fixed to different values
bool cubes_intersect(const std::vector<Cell>& a, const std::vector<Cell>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != Cell::Star && b[j] != Cell::Star && a[j] != b[j]) return false;
  return true;
}

std::vector<Cell> assignment_of(std::uint32_t x, unsigned n, std::uint32_t mask) {
  std::vector<Cell> rho(n, Cell::Star);
  for (unsigned j = 0; j < n; ++j)
    if ((mask >> (n - 1 - j)) & 1)
      rho[j] = BoolFunction::bit(x, n, j) ? Cell::One : Cell::Zero;
  return rho;
}

}  // namespace

FamilyValidation validate_certificate_family(const BoolFunction& f, const CertificateFamily& fam,
                                             UcMode mode) {
  if (fam.b != 0 && fam.b != 1) return {false, "b must be 0 or 1"};
  std::vector<bool> seen(f.table.size(), false);
  for (const auto& [x, rho] : fam.certs) {
    if (x >= f.table.size()) return {false, "input out of range"};
    if (rho.size() != f.n) return {false, "certificate arity mismatch"};
    if (f.table[x] != fam.b)
      return {false, "input " + std::to_string(x) + " is not a " + std::to_string(fam.b) + "-input"};
    if (seen[x]) return {false, "input " + std::to_string(x) + " listed twice"};
    seen[x] = true;
    if (!consistent_with(x, f.n, rho))
      return {false, "certificate of input " + std::to_string(x) + " is not consistent with it"};
    if (!is_certificate(f, fam.b, rho))
      return {false, "certificate of input " + std::to_string(x) + " does not force the value"};
  }
  for (std::uint32_t x = 0; x < f.table.size(); ++x)
    if (f.table[x] == fam.b && !seen[x])
      return {false, "input " + std::to_string(x) + " has no certificate"};

  for (std::size_t i = 0; i < fam.certs.size(); ++i) {
    for (std::size_t j = i + 1; j < fam.certs.size(); ++j) {
      if (mode == UcMode::Partition) {
        if (cubes_intersect(fam.certs[i].second, fam.certs[j].second))
          return {false, "certificates of inputs " + std::to_string(fam.certs[i].first) + " and " +
                             std::to_string(fam.certs[j].first) +
                             " overlap: some input is consistent with both"};
      } else {
        if (fam.certs[i].second == fam.certs[j].second)
          return {false, "inputs " + std::to_string(fam.certs[i].first) + " and " +
                             std::to_string(fam.certs[j].first) + " share one certificate"};
      }
    }
  }
  return {true, ""};
}

namespace {

struct UcSearch {
  const BoolFunction& f;
  UcMode mode;
  const std::vector<std::uint32_t>& inputs;
  const std::vector<std::vector<std::vector<Cell>>>& cands;  // per input, size-filtered
  std::vector<std::vector<Cell>> chosen;

  bool dfs(std::size_t i) {
    if (i == inputs.size()) return true;
    for (const auto& rho : cands[i]) {
      budget::tick();
      bool ok = true;
      for (const auto& prev : chosen) {
        if (mode == UcMode::Partition ? cubes_intersect(prev, rho) : prev == rho) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(rho);
      if (dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

UcResult uc_complexity(const BoolFunction& f, int b, UcMode mode, bool force) {
  if (b != 0 && b != 1) throw InvalidArgument("uc_complexity: b must be 0 or 1");
  if (!force && f.n > 5)
    throw GuardExceeded("uc_complexity: exact family search beyond arity 5, pass force");
  std::vector<std::uint32_t> inputs;
  for (std::uint32_t x = 0; x < f.table.size(); ++x)
    if (f.table[x] == b) inputs.push_back(x);
  if (inputs.empty()) return {0, {b, {}}};

  // all certifying assignments per input, ordered by size then subset value
  std::vector<std::uint32_t> masks(std::size_t{1} << f.n);
  std::iota(masks.begin(), masks.end(), 0u);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b2) {
    return std::popcount(a) < std::popcount(b2);
  });
  std::vector<std::vector<std::pair<int, std::vector<Cell>>>> all(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i)
    for (std::uint32_t mask : masks) {
      auto rho = assignment_of(inputs[i], f.n, mask);
      if (is_certificate(f, b, rho)) all[i].emplace_back(std::popcount(mask), std::move(rho));
    }

  for (int k = 0; k <= static_cast<int>(f.n); ++k) {
    std::vector<std::vector<std::vector<Cell>>> cands(inputs.size());
    bool feasible = true;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      for (const auto& [sz, rho] : all[i])
        if (sz <= k) cands[i].push_back(rho);
      feasible = feasible && !cands[i].empty();
    }
    if (!feasible) continue;
    UcSearch s{f, mode, inputs, cands, {}};
    if (s.dfs(0)) {
      CertificateFamily fam;
      fam.b = b;
      for (std::size_t i = 0; i < inputs.size(); ++i) fam.certs.emplace_back(inputs[i], s.chosen[i]);
      return {k, std::move(fam)};
    }
  }
  throw CheckFailed("uc_complexity: no family found even with full assignments");
}

// ---------------------------------------------------------------------------
// rectangle covers and partitions
// ---------------------------------------------------------------------------

CoverMode cover_mode_from_string(const std::string& s) {
  if (s == "cover") return CoverMode::Cover;
  if (s == "partition") return CoverMode::Partition;
  throw InvalidArgument("unknown cover mode '" + s + "'");
}

namespace {

// Effective view with cols <= 16 (transposed when needed) for column-subset
// enumeration.
struct CoverCtx {
  std::size_t R = 0, C = 0;
  bool transposed = false;
  std::vector<std::vector<std::uint8_t>> is_b;  // R x C
  std::vector<std::uint32_t> rowmask;           // b-columns per row

  std::vector<std::pair<std::size_t, std::size_t>> cells;  // b-cells (r, c)
  std::vector<std::vector<std::size_t>> cell_id;           // R x C -> id or SIZE_MAX

  static CoverCtx build(const CommMatrix& h, int b) {
    CoverCtx ctx;
    ctx.transposed = h.n_cols > 16 && h.n_rows <= h.n_cols;
    ctx.R = ctx.transposed ? h.n_cols : h.n_rows;
    ctx.C = ctx.transposed ? h.n_rows : h.n_cols;
    ctx.is_b.assign(ctx.R, std::vector<std::uint8_t>(ctx.C, 0));
    ctx.cell_id.assign(ctx.R, std::vector<std::size_t>(ctx.C, SIZE_MAX));
    ctx.rowmask.assign(ctx.R, 0);
    for (std::size_t r = 0; r < ctx.R; ++r)
      for (std::size_t c = 0; c < ctx.C; ++c) {
        const std::uint8_t v = ctx.transposed ? h.cells[c][r] : h.cells[r][c];
        if (v == b) {
          ctx.is_b[r][c] = 1;
          ctx.rowmask[r] |= std::uint32_t{1} << c;
          ctx.cell_id[r][c] = ctx.cells.size();
          ctx.cells.emplace_back(r, c);
        }
      }
    return ctx;
  }

  Rectangle to_rectangle(const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols) const {
    Rectangle rect;
    rect.rows = transposed ? cols : rows;
    rect.cols = transposed ? rows : cols;
    return rect;
  }
};

struct MaxRect {
  BitSet rows;
  std::uint32_t cols = 0;
  std::size_t size = 0;
};

std::vector<MaxRect> maximal_rectangles(const CoverCtx& ctx) {
  std::vector<MaxRect> out;
  if (ctx.C >= 31) throw GuardExceeded("rectangle enumeration: too many columns");
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << ctx.C); ++s) {
    budget::tick();
    BitSet rows(ctx.R);
    std::uint32_t closure = (std::uint32_t{1} << ctx.C) - 1;
    bool any = false;
    for (std::size_t r = 0; r < ctx.R; ++r) {
      if ((ctx.rowmask[r] & s) == s) {
        rows.set(r);
        closure &= ctx.rowmask[r];
        any = true;
      }
    }
    if (!any || closure != s) continue;  // keep closed column sets only
    MaxRect mr{std::move(rows), s, 0};
    mr.size = mr.rows.count() * static_cast<std::size_t>(std::popcount(s));
    out.push_back(std::move(mr));
  }
  return out;
}

BitSet rect_cells(const CoverCtx& ctx, const BitSet& rows, std::uint32_t cols) {
  BitSet cells(ctx.cells.size());
  rows.for_each([&](std::size_t r) {
    for (std::uint32_t m = cols; m; m &= m - 1) {
      const std::size_t c = static_cast<std::size_t>(std::countr_zero(m));
      cells.set(ctx.cell_id[r][c]);
    }
  });
  return cells;
}

struct CoverSolver {
  const CoverCtx& ctx;
  std::vector<MaxRect> rects;
  std::vector<BitSet> rcells;
  std::vector<std::vector<std::size_t>> cand;  // per cell: rect ids containing it
  std::size_t max_cover = 1;

  int best = INT_MAX;
  std::vector<std::size_t> best_sel, cur;

  void dfs(const BitSet& uncovered, int used) {
    const std::size_t left = uncovered.count();
    if (left == 0) {
      best = used;
      best_sel = cur;
      return;
    }
    if (used + static_cast<int>((left + max_cover - 1) / max_cover) >= best) return;
    budget::tick();
    std::size_t pivot = SIZE_MAX, fewest = SIZE_MAX;
    uncovered.for_each([&](std::size_t cell) {
      if (cand[cell].size() < fewest) {
        fewest = cand[cell].size();
        pivot = cell;
      }
    });
    for (std::size_t rid : cand[pivot]) {
      BitSet next = uncovered;
      next.subtract(rcells[rid]);
      cur.push_back(rid);
      dfs(next, used + 1);
      cur.pop_back();
    }
  }
};

CoverResult solve_cover(const CommMatrix& h, int b, const CoverCtx& ctx) {
  CoverSolver s{ctx, maximal_rectangles(ctx), {}, {}, 1, INT_MAX, {}, {}};
  s.rcells.reserve(s.rects.size());
  for (const auto& mr : s.rects) {
    s.rcells.push_back(rect_cells(ctx, mr.rows, mr.cols));
    s.max_cover = std::max(s.max_cover, mr.size);
  }
  s.cand.assign(ctx.cells.size(), {});
  for (std::size_t rid = 0; rid < s.rects.size(); ++rid)
    s.rcells[rid].for_each([&](std::size_t cell) { s.cand[cell].push_back(rid); });

  // greedy incumbent
  {
    BitSet uncovered(ctx.cells.size());
    for (std::size_t i = 0; i < ctx.cells.size(); ++i) uncovered.set(i);
    std::vector<std::size_t> sel;
    while (uncovered.any()) {
      std::size_t pick = SIZE_MAX, gain = 0;
      for (std::size_t rid = 0; rid < s.rects.size(); ++rid) {
        const std::size_t g = s.rcells[rid].and_with(uncovered).count();
        if (g > gain) {
          gain = g;
          pick = rid;
        }
      }
      uncovered.subtract(s.rcells[pick]);
      sel.push_back(pick);
    }
    s.best = static_cast<int>(sel.size());
    s.best_sel = std::move(sel);
  }

  BitSet all(ctx.cells.size());
  for (std::size_t i = 0; i < ctx.cells.size(); ++i) all.set(i);
  s.dfs(all, 0);

  CoverResult res;
  res.count = s.best;
  for (std::size_t rid : s.best_sel) {
    std::vector<std::size_t> cols;
    for (std::uint32_t m = s.rects[rid].cols; m; m &= m - 1)
      cols.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    res.rects.push_back(ctx.to_rectangle(s.rects[rid].rows.to_indices(), cols));
  }
  (void)h;
  return res;
}

struct PartitionSolver {
  const CoverCtx& ctx;
  std::size_t max_rect = 1;

  int best = INT_MAX;
  std::vector<std::pair<BitSet, std::uint32_t>> best_sel, cur;  // (rows, cols)

  bool covered_ok(const BitSet& uncovered, std::size_t r, std::uint32_t c) const {
    return ctx.is_b[r][c] && uncovered.test(ctx.cell_id[r][c]);
  }

  void dfs(const BitSet& uncovered, int used) {
    const std::size_t left = uncovered.count();
    if (left == 0) {
      best = used;
      best_sel = cur;
      return;
    }
    if (used + static_cast<int>((left + max_rect - 1) / max_rect) >= best) return;
    budget::tick();
    const std::size_t pivot = uncovered.first();
    const auto [pr, pc] = ctx.cells[pivot];

    std::vector<std::size_t> cols_avail;
    for (std::size_t c = 0; c < ctx.C; ++c)
      if (c != pc && ctx.is_b[pr][c] && uncovered.test(ctx.cell_id[pr][c])) cols_avail.push_back(c);

    // column subsets containing pc, larger first
    std::vector<std::uint32_t> csubs(std::size_t{1} << cols_avail.size());
    std::iota(csubs.begin(), csubs.end(), 0u);
    std::stable_sort(csubs.begin(), csubs.end(), [](std::uint32_t a, std::uint32_t b2) {
      return std::popcount(a) > std::popcount(b2);
    });
    for (std::uint32_t cs : csubs) {
      budget::tick();
      std::uint32_t cols = std::uint32_t{1} << pc;
      for (std::size_t i = 0; i < cols_avail.size(); ++i)
        if ((cs >> i) & 1) cols |= std::uint32_t{1} << cols_avail[i];

      std::vector<std::size_t> rows_avail;
      for (std::size_t r = 0; r < ctx.R; ++r) {
        if (r == pr) continue;
        bool ok = true;
        for (std::uint32_t m = cols; m && ok; m &= m - 1)
          ok = covered_ok(uncovered, r, static_cast<std::size_t>(std::countr_zero(m)));
        if (ok) rows_avail.push_back(r);
      }
      std::vector<std::uint32_t> rsubs(std::size_t{1} << std::min<std::size_t>(rows_avail.size(), 25));
      if (rows_avail.size() > 25) throw GuardExceeded("partition search: row branching too wide");
      std::iota(rsubs.begin(), rsubs.end(), 0u);
      std::stable_sort(rsubs.begin(), rsubs.end(), [](std::uint32_t a, std::uint32_t b2) {
        return std::popcount(a) > std::popcount(b2);
      });
      for (std::uint32_t rs : rsubs) {
        BitSet rows(ctx.R);
        rows.set(pr);
        for (std::size_t i = 0; i < rows_avail.size(); ++i)
          if ((rs >> i) & 1) rows.set(rows_avail[i]);
        BitSet next = uncovered;
        next.subtract(rect_cells(ctx, rows, cols));
        cur.emplace_back(rows, cols);
        dfs(next, used + 1);
        cur.pop_back();
      }
    }
  }
};

CoverResult solve_partition(const CoverCtx& ctx) {
  PartitionSolver s{ctx, 1, INT_MAX, {}, {}};
  for (const auto& mr : maximal_rectangles(ctx)) s.max_rect = std::max(s.max_rect, mr.size);

  // greedy maximal-within-uncovered incumbent
  {
    BitSet uncovered(ctx.cells.size());
    for (std::size_t i = 0; i < ctx.cells.size(); ++i) uncovered.set(i);
    std::vector<std::pair<BitSet, std::uint32_t>> sel;
    while (uncovered.any()) {
      const auto [pr, pc] = ctx.cells[uncovered.first()];
      std::uint32_t cols = 0;
      for (std::size_t c = 0; c < ctx.C; ++c)
        if (ctx.is_b[pr][c] && uncovered.test(ctx.cell_id[pr][c]))
          cols |= std::uint32_t{1} << c;
      BitSet rows(ctx.R);
      for (std::size_t r = 0; r < ctx.R; ++r) {
        bool ok = true;
        for (std::uint32_t m = cols; m && ok; m &= m - 1)
          ok = ctx.is_b[r][std::countr_zero(m)] &&
               uncovered.test(ctx.cell_id[r][std::countr_zero(m)]);
        if (ok) rows.set(r);
      }
      uncovered.subtract(rect_cells(ctx, rows, cols));
      sel.emplace_back(std::move(rows), cols);
    }
    s.best = static_cast<int>(sel.size());
    s.best_sel = std::move(sel);
  }

  BitSet all(ctx.cells.size());
  for (std::size_t i = 0; i < ctx.cells.size(); ++i) all.set(i);
  s.dfs(all, 0);

  CoverResult res;
  res.count = s.best;
  for (const auto& [rows, cols] : s.best_sel) {
    std::vector<std::size_t> cv;
    for (std::uint32_t m = cols; m; m &= m - 1)
      cv.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    res.rects.push_back(ctx.to_rectangle(rows.to_indices(), cv));
  }
  return res;
}

}  // namespace

CoverResult cover_number(const CommMatrix& h, int b, CoverMode mode, bool force) {
  if (b != 0 && b != 1) throw InvalidArgument("cover_number: b must be 0 or 1");
  if (!force && h.n_rows * h.n_cols > 256)
    throw GuardExceeded("cover_number: matrix beyond 256 cells, pass force");
  const CoverCtx ctx = CoverCtx::build(h, b);
  if (ctx.cells.empty()) return {0, {}};
  CoverResult res = mode == CoverMode::Cover ? solve_cover(h, b, ctx) : solve_partition(ctx);
  const FamilyValidation check = validate_rectangles(h, b, res.rects, mode);
  if (!check.ok) throw CheckFailed("cover_number: witness failed validation: " + check.reason);
  return res;
}

FamilyValidation validate_rectangles(const CommMatrix& h, int b,
                                     const std::vector<Rectangle>& rects, CoverMode mode) {
  std::vector<std::vector<int>> covered(h.n_rows, std::vector<int>(h.n_cols, 0));
  for (std::size_t i = 0; i < rects.size(); ++i) {
    const auto& rect = rects[i];
    if (rect.rows.empty() || rect.cols.empty())
      return {false, "rectangle " + std::to_string(i + 1) + " has an empty side"};
    for (std::size_t r : rect.rows)
      for (std::size_t c : rect.cols) {
        if (r >= h.n_rows || c >= h.n_cols)
          return {false, "rectangle " + std::to_string(i + 1) + " out of range"};
        if (h.cells[r][c] != b)
          return {false, "rectangle " + std::to_string(i + 1) + " is not " + std::to_string(b) +
                             "-monochromatic at (" + std::to_string(r + 1) + "," +
                             std::to_string(c + 1) + ")"};
        ++covered[r][c];
      }
  }
  for (std::size_t r = 0; r < h.n_rows; ++r)
    for (std::size_t c = 0; c < h.n_cols; ++c) {
      if (h.cells[r][c] != b) continue;
      const int k = covered[r][c];
      const bool ok = mode == CoverMode::Cover ? k >= 1 : k == 1;
      if (!ok)
        return {false, "cell (" + std::to_string(r + 1) + "," + std::to_string(c + 1) +
                           ") covered " + std::to_string(k) + " times"};
    }
  return {true, ""};
}

// ---------------------------------------------------------------------------
// lifting
// ---------------------------------------------------------------------------

namespace {

unsigned gadget_width(const CommMatrix& g) {
  if (g.n_rows != g.n_cols || g.n_rows < 2 || (g.n_rows & (g.n_rows - 1)) != 0)
    throw InvalidArgument("gadget must be square with power-of-two size");
  return static_cast<unsigned>(std::countr_zero(g.n_rows));
}

std::string bit_label(std::uint32_t v, unsigned bits) {
  std::string s(bits, '0');
  for (unsigned i = 0; i < bits; ++i)
    if ((v >> (bits - 1 - i)) & 1) s[i] = '1';
  return s;
}

}  // namespace

CommMatrix lift(const BoolFunction& f, const CommMatrix& gadget, bool force) {
  const unsigned k = gadget_width(gadget);
  const unsigned bits = f.n * k;
  if (f.n == 0) throw InvalidArgument("lift: inner function must have positive arity");
  if (!force && bits > 12)
    throw GuardExceeded("lift: " + std::to_string(bits) + " input bits per side exceed 12, pass force");
  const std::size_t N = std::size_t{1} << bits;
  const std::uint32_t bmask = (std::uint32_t{1} << k) - 1;

  CommMatrix out;
  out.n_rows = out.n_cols = N;
  out.cells.assign(N, std::vector<std::uint8_t>(N, 0));
  out.row_labels.reserve(N);
  for (std::size_t v = 0; v < N; ++v)
    out.row_labels.push_back(bit_label(static_cast<std::uint32_t>(v), bits));
  out.col_labels = out.row_labels;

  for (std::size_t X = 0; X < N; ++X)
    for (std::size_t Y = 0; Y < N; ++Y) {
      std::uint32_t z = 0;
      for (unsigned i = 0; i < f.n; ++i) {
        const std::uint32_t xi = (static_cast<std::uint32_t>(X) >> ((f.n - 1 - i) * k)) & bmask;
        const std::uint32_t yi = (static_cast<std::uint32_t>(Y) >> ((f.n - 1 - i) * k)) & bmask;
        z = (z << 1) | gadget.cells[xi][yi];
      }
      out.cells[X][Y] = f.table[z];
    }
  return out;
}

std::vector<Rectangle> certificates_to_partition(
    const BoolFunction& f, const CommMatrix& gadget, const CertificateFamily& fam,
    const std::array<std::vector<Rectangle>, 2>& gadget_partitions, bool force) {
  const FamilyValidation fv = validate_certificate_family(f, fam, UcMode::Partition);
  if (!fv.ok) throw InvalidArgument("certificate family invalid: " + fv.reason);
  for (int v = 0; v < 2; ++v) {
    bool has = false;
    for (const auto& row : gadget.cells)
      for (std::uint8_t c : row) has = has || c == v;
    if (!has && gadget_partitions[v].empty()) continue;
    const FamilyValidation gv =
        validate_rectangles(gadget, v, gadget_partitions[v], CoverMode::Partition);
    if (!gv.ok)
      throw InvalidArgument("gadget " + std::to_string(v) + "-partition invalid: " + gv.reason);
  }

  const unsigned k = gadget_width(gadget);
  const unsigned bits = f.n * k;
  const CommMatrix lifted = lift(f, gadget, force);
  const std::size_t N = std::size_t{1} << bits;
  const std::uint32_t bmask = (std::uint32_t{1} << k) - 1;

  std::vector<Rectangle> out;
  for (const auto& [x, rho] : fam.certs) {
    (void)x;
    std::vector<unsigned> fixed;
    for (unsigned j = 0; j < f.n; ++j)
      if (rho[j] != Cell::Star) fixed.push_back(j);

    // odometer over one gadget rectangle per fixed coordinate
    std::vector<std::size_t> choice(fixed.size(), 0);
    bool any_empty = false;
    for (unsigned j : fixed)
      if (gadget_partitions[rho[j] == Cell::One ? 1 : 0].empty()) any_empty = true;
    if (any_empty) continue;  // the gadget never outputs that value: no cells to cover
    for (;;) {
      budget::tick();
      std::vector<std::vector<std::uint8_t>> row_ok(fixed.size()), col_ok(fixed.size());
      for (std::size_t t = 0; t < fixed.size(); ++t) {
        const int v = rho[fixed[t]] == Cell::One ? 1 : 0;
        const Rectangle& gr = gadget_partitions[v][choice[t]];
        row_ok[t].assign(gadget.n_rows, 0);
        col_ok[t].assign(gadget.n_cols, 0);
        for (std::size_t r : gr.rows) row_ok[t][r] = 1;
        for (std::size_t c : gr.cols) col_ok[t][c] = 1;
      }
      Rectangle rect;
      for (std::size_t X = 0; X < N; ++X) {
        bool ok = true;
        for (std::size_t t = 0; t < fixed.size() && ok; ++t) {
          const std::uint32_t xi =
              (static_cast<std::uint32_t>(X) >> ((f.n - 1 - fixed[t]) * k)) & bmask;
          ok = row_ok[t][xi];
        }
        if (ok) rect.rows.push_back(X);
      }
      for (std::size_t Y = 0; Y < N; ++Y) {
        bool ok = true;
        for (std::size_t t = 0; t < fixed.size() && ok; ++t) {
          const std::uint32_t yi =
              (static_cast<std::uint32_t>(Y) >> ((f.n - 1 - fixed[t]) * k)) & bmask;
          ok = col_ok[t][yi];
        }
        if (ok) rect.cols.push_back(Y);
      }
      if (!rect.rows.empty() && !rect.cols.empty()) out.push_back(std::move(rect));

      // advance odometer
      std::size_t t = 0;
      for (; t < fixed.size(); ++t) {
        const int v = rho[fixed[t]] == Cell::One ? 1 : 0;
        if (++choice[t] < gadget_partitions[v].size()) break;
        choice[t] = 0;
      }
      if (t == fixed.size()) break;
      if (fixed.empty()) break;
    }
  }

  const FamilyValidation check = validate_rectangles(lifted, fam.b, out, CoverMode::Partition);
  if (!check.ok)
    throw CheckFailed("lifted rectangle family is not an exact partition: " + check.reason);
  return out;
}

// ---------------------------------------------------------------------------
// conflict graph and the separation pipeline
// ---------------------------------------------------------------------------

LabeledGraph ass_conflict_graph(const CommMatrix& h, bool force) {
  std::vector<std::pair<std::size_t, std::size_t>> zeros;
  for (std::size_t r = 0; r < h.n_rows; ++r)
    for (std::size_t c = 0; c < h.n_cols; ++c)
      if (h.cells[r][c] == 0) zeros.emplace_back(r, c);
  if (!force && zeros.size() > 200)
    throw GuardExceeded("ass_conflict_graph: more than 200 zero cells, pass force");

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < zeros.size(); ++i)
    for (std::size_t j = i + 1; j < zeros.size(); ++j) {
      const auto [x, y] = zeros[i];
      const auto [x2, y2] = zeros[j];
      if (h.cells[x][y2] == 1 || h.cells[x2][y] == 1) edges.emplace_back(i, j);
    }
  LabeledGraph g = make_graph(zeros.size(), std::move(edges));
  g.payloads.reserve(zeros.size());
  for (const auto& [r, c] : zeros) {
    const std::string rl = h.row_labels.empty() ? std::to_string(r + 1) : h.row_labels[r];
    const std::string cl = h.col_labels.empty() ? std::to_string(c + 1) : h.col_labels[c];
    g.payloads.push_back(rl + "," + cl);
  }
  return g;
}

namespace {

LabeledGraph induced_subgraph(const LabeledGraph& g, const BitSet& keep,
                              std::vector<std::size_t>& new_id) {
  new_id.assign(g.n, SIZE_MAX);
  std::size_t next = 0;
  std::vector<std::string> payloads;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (!keep.test(v)) continue;
    new_id[v] = next++;
    if (!g.payloads.empty()) payloads.push_back(g.payloads[v]);
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges)
    if (keep.test(u) && keep.test(v)) edges.emplace_back(new_id[u], new_id[v]);
  LabeledGraph out = make_graph(next, std::move(edges));
  out.payloads = std::move(payloads);
  return out;
}

}  // namespace

AssPipelineResult ass_pipeline(const CommMatrix& h, bool force) {
  const int c = cover_number(h, 0, CoverMode::Cover, force).count;
  const CoverResult ones = cover_number(h, 1, CoverMode::Partition, force);
  const int m = ones.count;

  LabeledGraph g = ass_conflict_graph(h, force);

  const ColoringResult chi_g = chromatic_number(g, force);
  if (chi_g.chi < c)
    throw CheckFailed("pipeline step cover-from-coloring: chi(G) = " + std::to_string(chi_g.chi) +
                      " < Cov_0 = " + std::to_string(c));

  // vertex id -> 0-cell (x, y); recomputed in the graph's construction order
  std::vector<std::pair<std::size_t, std::size_t>> zeros;
  for (std::size_t r = 0; r < h.n_rows; ++r)
    for (std::size_t cc = 0; cc < h.n_cols; ++cc)
      if (h.cells[r][cc] == 0) zeros.emplace_back(r, cc);

  // oriented bicliques from the 1-partition rectangles
  std::vector<BitSet> s_minus(ones.rects.size(), BitSet(g.n)),
      s_plus(ones.rects.size(), BitSet(g.n));
  for (std::size_t i = 0; i < ones.rects.size(); ++i) {
    std::vector<std::uint8_t> in_a(h.n_rows, 0), in_b(h.n_cols, 0);
    for (std::size_t r : ones.rects[i].rows) in_a[r] = 1;
    for (std::size_t cc : ones.rects[i].cols) in_b[cc] = 1;
    for (std::size_t v = 0; v < g.n; ++v) {
      if (in_a[zeros[v].first]) s_minus[i].set(v);
      if (in_b[zeros[v].second]) s_plus[i].set(v);
    }
  }

  // each conflict edge must be covered once or twice by the bicliques
  std::vector<std::pair<std::size_t, std::size_t>> h2_edges;
  for (auto [u, v] : g.edges) {
    int cover = 0;
    for (std::size_t i = 0; i < ones.rects.size(); ++i) {
      const bool fwd = s_minus[i].test(u) && s_plus[i].test(v);
      const bool bwd = s_minus[i].test(v) && s_plus[i].test(u);
      if (fwd && bwd)
        throw CheckFailed("pipeline step biclique-orientation: one biclique covers an edge twice");
      if (fwd || bwd) ++cover;
    }
    if (cover < 1 || cover > 2)
      throw CheckFailed("pipeline step once-or-twice: edge {" + std::to_string(u + 1) + "," +
                        std::to_string(v + 1) + "} covered " + std::to_string(cover) + " times");
    if (cover == 2) h2_edges.emplace_back(u, v);
  }

  LabeledGraph h2 = make_graph(g.n, h2_edges);
  h2.payloads = g.payloads;

  // pairwise refinements partition the doubly covered subgraph; (i, j) and
  // (j, i) describe the same biclique with flipped orientation, so i < j
  std::vector<OrientedBiclique> qij;
  for (std::size_t i = 0; i < ones.rects.size(); ++i)
    for (std::size_t j = i + 1; j < ones.rects.size(); ++j) {
      BitSet left = s_minus[i].and_with(s_plus[j]);
      BitSet right = s_plus[i].and_with(s_minus[j]);
      if (left.any() && right.any()) qij.push_back({left.to_indices(), right.to_indices()});
    }
  {
    const FamilyCheck check = validate_biclique_family(h2, qij, FamilyMode::Partition);
    if (!check.ok) throw CheckFailed("pipeline step pair-partition: " + check.reason);
  }

  const int s = static_cast<int>(isqrt_ceil(static_cast<std::uint64_t>(c)));
  const ColoringResult chi_h2 = chromatic_number(h2, force);

  AssPipelineResult res;
  if (chi_h2.chi >= s) {
    res.graph = std::move(h2);
    res.partition = std::move(qij);
    res.report.branch = "H2";
    res.report.chi_out = chi_h2.chi;
  } else {
    // some color class of H2 must induce a subgraph of G with large chromatic
    // number, and the unrestricted bicliques restrict to a partition on it
    bool found = false;
    for (int color = 0; color < chi_h2.chi && !found; ++color) {
      BitSet keep(g.n);
      for (std::size_t v = 0; v < g.n; ++v)
        if (chi_h2.colors[v] == color) keep.set(v);
      std::vector<std::size_t> new_id;
      LabeledGraph sub = induced_subgraph(g, keep, new_id);
      const ColoringResult chi_sub = chromatic_number(sub, force);
      if (chi_sub.chi < s) continue;
      found = true;
      std::vector<OrientedBiclique> restricted;
      for (std::size_t i = 0; i < ones.rects.size(); ++i) {
        OrientedBiclique b;
        s_minus[i].for_each([&](std::size_t v) {
          if (keep.test(v)) b.left.push_back(new_id[v]);
        });
        s_plus[i].for_each([&](std::size_t v) {
          if (keep.test(v)) b.right.push_back(new_id[v]);
        });
        if (!b.left.empty() && !b.right.empty()) restricted.push_back(std::move(b));
      }
      res.graph = std::move(sub);
      res.partition = std::move(restricted);
      res.report.branch = "color-class";
      res.report.chi_out = chi_sub.chi;
    }
    if (!found)
      throw CheckFailed("pipeline step color-class-existence: no class reaches ceil(sqrt(c))");
  }

  {
    const FamilyCheck check =
        validate_biclique_family(res.graph, res.partition, FamilyMode::Partition);
    if (!check.ok) throw CheckFailed("pipeline step output-partition: " + check.reason);
  }
  if (res.partition.size() > static_cast<std::size_t>(m) * static_cast<std::size_t>(m))
    throw CheckFailed("pipeline step output-size: more than m^2 bicliques");
  if (res.report.chi_out < s)
    throw CheckFailed("pipeline step output-chromatic: chi below ceil(sqrt(c))");

  res.report.c = c;
  res.report.m = m;
  res.report.bp_size = res.partition.size();
  return res;
}

}  // namespace pcc
