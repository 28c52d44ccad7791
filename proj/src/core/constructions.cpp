#include "core/constructions.hpp"

#include <numeric>

#include "core/dimensions.hpp"
#include "core/graphtools.hpp"

namespace pcc {

namespace {

// C(n, k) capped to avoid overflow.
std::uint64_t binom_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (r > cap) return cap + 1;
    r = r * (n - k + i) / i;
  }
  if (r > cap) return cap + 1;
  return static_cast<std::uint64_t>(r);
}

}  // namespace

PartialMatrix gen_hrd(unsigned r, unsigned d) {
  if (r < 1 || d < 1) throw InvalidArgument("gen_hrd: r and d must be positive");
  if (r > 20) throw GuardExceeded("gen_hrd: r too large");
  const std::uint64_t base = std::uint64_t{d} << r;  // d * 2^r
  const std::uint64_t tail = std::uint64_t{d} * r;
  constexpr std::uint64_t kMaxRows = 1'000'000;
  const std::uint64_t n_sets = binom_capped(base, d, kMaxRows);
  if (n_sets > kMaxRows || n_sets * tail > kMaxRows)
    throw GuardExceeded("gen_hrd: concept count exceeds 10^6, choose smaller r, d");

  PartialMatrix m;
  m.n_points = static_cast<std::size_t>(base + tail);

  // d-subsets of [base] in lexicographic order of the sorted tuples
  std::vector<std::size_t> f(d);
  std::iota(f.begin(), f.end(), std::size_t{0});
  const bool beta_defined_cap = tail < 63;  // i <= 2^tail only reachable then
  for (std::uint64_t i = 1;; ++i) {
    const bool has_beta = beta_defined_cap && i <= (std::uint64_t{1} << tail);
    for (std::uint64_t j = 1; j <= tail; ++j) {
      std::vector<Cell> row(m.n_points, Cell::Star);
      for (std::uint64_t x = 0; x < base; ++x) row[x] = Cell::Zero;
      for (std::size_t x : f) row[x] = Cell::One;
      if (has_beta) {
        const std::uint64_t bit = ((i - 1) >> (tail - j)) & 1;
        row[base + j - 1] = bit ? Cell::One : Cell::Zero;
      }
      m.rows.push_back(std::move(row));
    }
    // next combination
    std::size_t t = d;
    bool more = false;
    while (t > 0) {
      --t;
      if (f[t] != t + base - d) {
        ++f[t];
        for (std::size_t q = t + 1; q < d; ++q) f[q] = f[q - 1] + 1;
        more = true;
        break;
      }
    }
    if (!more) break;
  }
  return m;
}

PartialMatrix gen_biclique_class(const LabeledGraph& g,
                                 const std::vector<OrientedBiclique>& partition) {
  const FamilyCheck check = validate_biclique_family(g, partition, FamilyMode::Partition);
  if (!check.ok) {
    std::string msg = "not a partition: " + check.reason;
    if (check.edge)
      msg += " at edge {" + std::to_string(check.edge->first + 1) + "," +
             std::to_string(check.edge->second + 1) + "}";
    throw InvalidArgument(msg);
  }
  PartialMatrix m;
  m.n_points = g.n;
  m.rows.reserve(partition.size());
  for (const auto& b : partition) {
    std::vector<Cell> row(g.n, Cell::Star);
    for (std::size_t v : b.left) row[v] = Cell::Zero;
    for (std::size_t v : b.right) row[v] = Cell::One;
    m.rows.push_back(std::move(row));
  }
  return m;
}

Pattern ld3_forbidden_pattern() { return pattern_from_strings({"10", "10"}); }

bool verify_ld_le_2(const PartialMatrix& m) {
  if (contains_pattern(m, ld3_forbidden_pattern())) return false;
  if (m.n_points <= 8 && m.n_concepts() <= 64) {
    // pattern absence already implies it; the tree search cross-checks
    if (ld_dim_tree_oracle(m, 3).shattered) return false;
  }
  return true;
}

std::vector<OrientedBiclique> star_partition(std::size_t n) {
  std::vector<OrientedBiclique> out;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    OrientedBiclique b;
    b.left = {i};
    for (std::size_t j = i + 1; j < n; ++j) b.right.push_back(j);
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace pcc
