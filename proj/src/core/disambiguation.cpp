#include "core/disambiguation.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <numeric>

#include "core/budget.hpp"

namespace pcc {

const char* soa_reason_name(SoaReason r) {
  switch (r) {
    case SoaReason::LdMax:
      return "ld-max";
    case SoaReason::TieFavor0:
      return "tie-favor-0";
    default:
      return "forced";
  }
}

namespace {

PartialMatrix take_rows(const PartialMatrix& shape, const std::vector<std::vector<Cell>>& cells,
                        const std::vector<std::size_t>& idx) {
  PartialMatrix sub;
  sub.n_points = shape.n_points;
  sub.rows.reserve(idx.size());
  for (std::size_t r : idx) sub.rows.push_back(cells[r]);
  return sub;
}

}  // namespace

SoaTrace soa_disambiguate(const PartialMatrix& m, const std::vector<std::size_t>* order_opt) {
  const std::size_t n = m.n_points;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (order_opt) {
    if (order_opt->size() != n) throw InvalidArgument("soa: order length must equal n_points");
    std::vector<bool> seen(n, false);
    for (std::size_t p : *order_opt) {
      if (p >= n || seen[p]) throw InvalidArgument("soa: order must be a permutation of the points");
      seen[p] = true;
    }
    order = *order_opt;
  }

  std::vector<std::vector<Cell>> cells = m.rows;
  SoaTrace trace;
  trace.order = order;
  LdMemo memo;

  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t p = order[k];
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t r = 0; r < cells.size(); ++r) {
      std::string prefix(k, '0');
      for (std::size_t j = 0; j < k; ++j) {
        const Cell c = cells[r][order[j]];
        if (c == Cell::Star) throw CheckFailed("soa: unresolved Star before the current point");
        prefix[j] = cell_char(c);
      }
      groups[prefix].push_back(r);
    }
    for (auto& [prefix, idx] : groups) {
      if (idx.empty()) throw CheckFailed("soa: empty prefix group");
      budget::tick();
      std::vector<std::size_t> i0, i1, istar;
      for (std::size_t r : idx) {
        switch (cells[r][p]) {
          case Cell::Zero:
            i0.push_back(r);
            break;
          case Cell::One:
            i1.push_back(r);
            break;
          default:
            istar.push_back(r);
        }
      }
      const int ld_group = ld_dim(take_rows(m, cells, idx), memo);
      const int ld0 = i0.empty() ? -1 : ld_dim(take_rows(m, cells, i0), memo);
      const int ld1 = i1.empty() ? -1 : ld_dim(take_rows(m, cells, i1), memo);
      if (std::min(ld0, ld1) > ld_group - 1)
        throw CheckFailed("soa progress property violated at point " + std::to_string(p + 1) +
                          ", prefix '" + prefix + "'");
      if (istar.empty()) continue;

      const int chosen = ld1 > ld0 ? 1 : 0;
      SoaReason reason;
      if (i0.empty() && i1.empty())
        reason = SoaReason::TieFavor0;
      else if (i0.empty() || i1.empty())
        reason = SoaReason::Forced;
      else
        reason = ld0 == ld1 ? SoaReason::TieFavor0 : SoaReason::LdMax;

      for (std::size_t r : istar) cells[r][p] = chosen ? Cell::One : Cell::Zero;
      trace.steps.push_back({p, prefix, chosen, reason});
    }
  }

  PartialMatrix filled = m;
  filled.rows = std::move(cells);
  trace.output = to_total(filled);
  return trace;
}

MinVcResult min_vc_disambiguation(const PartialMatrix& m, bool force) {
  if (m.rows.empty()) throw InvalidArgument("min_vc_disambiguation: undefined for empty class");
  std::vector<std::pair<std::size_t, std::size_t>> stars;
  for (std::size_t r = 0; r < m.n_concepts(); ++r)
    for (std::size_t p = 0; p < m.n_points; ++p)
      if (m.rows[r][p] == Cell::Star) stars.emplace_back(r, p);
  const std::size_t s = stars.size();
  if (!force && s > 20)
    throw GuardExceeded("min_vc_disambiguation: " + std::to_string(s) +
                        " Stars exceed the 2^20 enumeration guard, pass force");

  PartialMatrix cur = m;
  std::vector<std::uint8_t> bits(s, 0);
  for (auto [r, p] : stars) cur.rows[r][p] = Cell::Zero;

  int best_vc = INT_MAX;
  std::vector<std::uint8_t> best_bits;
  TotalMatrix best;

  const std::uint64_t total = std::uint64_t{1} << s;
  for (std::uint64_t t = 0; t < total; ++t) {
    budget::tick();
    if (t > 0) {
      // Gray code: one Star flips per completion
      const std::size_t flip = static_cast<std::size_t>(std::countr_zero(t));
      bits[flip] ^= 1;
      cur.rows[stars[flip].first][stars[flip].second] = bits[flip] ? Cell::One : Cell::Zero;
    }
    const int vc = vc_dim(cur).dim;
    if (vc < best_vc || (vc == best_vc && bits < best_bits)) {
      best_vc = vc;
      best_bits = bits;
      best = to_total(cur);
    }
  }
  return {best_vc, std::move(best)};
}

namespace {

// C(n, k) capped at `cap` to avoid overflow.
std::uint64_t binom_capped(std::size_t n, std::size_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

std::vector<GrowthPoint> growth_profile(const PartialMatrix& m,
                                        const std::vector<std::size_t>& sizes, Rng& rng) {
  std::vector<GrowthPoint> out;
  for (std::size_t k : sizes) {
    if (k > m.n_points) throw InvalidArgument("growth_profile: subset size exceeds n_points");
    std::size_t best = 0;
    auto eval = [&](const std::vector<std::size_t>& pts) {
      budget::tick();
      const SoaTrace t = soa_disambiguate(restrict_points(m, pts));
      best = std::max(best, distinct_rows(t.output));
    };
    if (binom_capped(m.n_points, k, 2000) <= 2000) {
      std::vector<std::size_t> combo(k);
      std::iota(combo.begin(), combo.end(), std::size_t{0});
      bool more = k <= m.n_points;
      while (more) {
        eval(combo);
        // advance combination
        std::size_t i = k;
        more = false;
        while (i > 0) {
          --i;
          if (combo[i] != i + m.n_points - k) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            more = true;
            break;
          }
        }
        if (k == 0) break;  // single empty subset
      }
    } else {
      for (int trial = 0; trial < 200; ++trial) eval(rng.sample(m.n_points, k));
    }
    out.push_back({k, best});
  }
  return out;
}

}  // namespace pcc
