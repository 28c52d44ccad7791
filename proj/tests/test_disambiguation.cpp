#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/constructions.hpp"
#include "core/disambiguation.hpp"
#include "core/report.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"
#include "helpers.hpp"

using namespace pcc;
using pcc::testing::mat;

namespace {

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int brute_min_vc(const PartialMatrix& m) {
  std::vector<std::pair<std::size_t, std::size_t>> stars;
  for (std::size_t r = 0; r < m.n_concepts(); ++r)
    for (std::size_t p = 0; p < m.n_points; ++p)
      if (m.rows[r][p] == Cell::Star) stars.emplace_back(r, p);
  int best = INT_MAX;
  for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << stars.size()); ++fill) {
    PartialMatrix c = m;
    for (std::size_t s = 0; s < stars.size(); ++s)
      c.rows[stars[s].first][stars[s].second] = ((fill >> s) & 1) ? Cell::One : Cell::Zero;
    best = std::min(best, vc_dim(c).dim);
  }
  return best;
}

}  // namespace

TEST_CASE("the deterministic fill reproduces the reference instance") {
  const PartialMatrix m = gen_hrd(1, 2);
  const SoaTrace trace = soa_disambiguate(m);
  CHECK(format_pcc(trace.output) == pcc::testing::kRef12Soa);
  CHECK(is_disambiguation(m, trace.output).ok);
  CHECK(distinct_rows(trace.output) == 6);

  // the eight starred cells in the first eight rows, in row order
  const int expected[8] = {0, 0, 1, 0, 0, 1, 1, 1};
  for (std::size_t r = 0; r < 8; ++r) {
    std::size_t star = 0;
    for (std::size_t p = 0; p < 6; ++p)
      if (m.rows[r][p] == Cell::Star) star = p;
    CHECK(static_cast<int>(trace.output.rows[r][star]) == expected[r]);
  }
}

TEST_CASE("a total class passes through with no steps") {
  const PartialMatrix m = mat({"0110", "1001", "1111"});
  const SoaTrace trace = soa_disambiguate(m);
  CHECK(trace.steps.empty());
  CHECK(format_pcc(trace.output) == format_pcc(m));
}

TEST_CASE("fill is deterministic") {
  const PartialMatrix m = gen_hrd(2, 1);
  const SoaTrace a = soa_disambiguate(m);
  const SoaTrace b = soa_disambiguate(m);
  CHECK(soa_trace_json(a).dump() == soa_trace_json(b).dump());
}

TEST_CASE("custom orders are validated and honored") {
  const PartialMatrix m = mat({"*1", "01"});
  std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS_AS(soa_disambiguate(m, &bad), InvalidArgument);
  std::vector<std::size_t> rev{1, 0};
  const SoaTrace t = soa_disambiguate(m, &rev);
  CHECK(t.order == rev);
  CHECK(is_disambiguation(m, t.output).ok);

  // any processing order yields a valid fill and respects the progress property
  Rng rng(34);
  for (int trial = 0; trial < 15; ++trial) {
    const PartialMatrix r = gen_random_partial(rng, 7, 12, 0.35);
    std::vector<std::size_t> order = rng.sample(r.n_points, r.n_points);
    for (std::size_t i = order.size(); i > 1; --i)
      std::swap(order[i - 1], order[rng.index(i)]);
    const SoaTrace rt = soa_disambiguate(r, &order);
    CHECK(is_disambiguation(r, rt.output).ok);
  }
}

TEST_CASE("filled classes satisfy the binomial size bound") {
  Rng rng(31);
  for (int t = 0; t < 25; ++t) {
    const PartialMatrix m = gen_random_partial(rng, 9, 24, 0.3);
    const int ld = ld_dim(m);
    const SoaTrace trace = soa_disambiguate(m);  // progress property asserted inside
    CHECK(is_disambiguation(m, trace.output).ok);
    std::uint64_t bound = 0;
    for (int i = 0; i <= ld; ++i) bound += binom(m.n_points, static_cast<std::uint64_t>(i));
    CHECK(distinct_rows(trace.output) <= bound);
  }
}

TEST_CASE("minimum-vc completion equals brute force") {
  // total input comes back unchanged
  const PartialMatrix total = mat({"011", "101"});
  const MinVcResult r0 = min_vc_disambiguation(total);
  CHECK(r0.vc_min == vc_dim(total).dim);
  CHECK(format_pcc(r0.witness) == format_pcc(total));

  // one Star: the class from the K3 star partition
  const PartialMatrix g3 = gen_biclique_class(complete_graph(3), star_partition(3));
  CHECK(min_vc_disambiguation(g3).vc_min == brute_min_vc(g3));

  // a completion with identical rows kills every shattered singleton
  const PartialMatrix two = mat({"1*", "*0"});
  const MinVcResult r2 = min_vc_disambiguation(two);
  CHECK(r2.vc_min == brute_min_vc(two));
  CHECK(r2.vc_min == 0);
  CHECK(is_disambiguation(two, r2.witness).ok);

  Rng rng(32);
  for (int t = 0; t < 15; ++t) {
    PartialMatrix m = gen_random_partial(rng, 5, 5, 0.25);
    const MinVcResult r = min_vc_disambiguation(m);
    CHECK(r.vc_min == brute_min_vc(m));
    CHECK(is_disambiguation(m, r.witness).ok);
    // sandwich: vc(m) <= vc_min <= vc(soa output)
    CHECK(vc_dim(m).dim <= r.vc_min);
    CHECK(r.vc_min <= vc_dim(soa_disambiguate(m).output.as_partial()).dim);
  }
}

TEST_CASE("min-vc guard counts Stars") {
  PartialMatrix m;
  m.n_points = 21;
  m.rows.assign(1, std::vector<Cell>(21, Cell::Star));
  CHECK_THROWS_AS(min_vc_disambiguation(m), GuardExceeded);
}

TEST_CASE("growth profile") {
  const PartialMatrix m = gen_hrd(1, 2);
  Rng rng(33);
  const auto profile = growth_profile(m, {0, 4, 6}, rng);
  REQUIRE(profile.size() == 3);
  CHECK(profile[0].k == 0);
  CHECK(profile[0].max_distinct == 1);
  CHECK(profile[1].max_distinct <= 15);  // binomial sum bound at n=4 with ld <= 3
  CHECK(profile[2].max_distinct == distinct_rows(soa_disambiguate(m).output));
  CHECK_THROWS_AS(growth_profile(m, {7}, rng), InvalidArgument);
}
