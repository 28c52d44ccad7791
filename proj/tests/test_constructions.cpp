#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/constructions.hpp"
#include "core/dimensions.hpp"
#include "core/matrix.hpp"
#include "helpers.hpp"

using namespace pcc;
using pcc::testing::mat;

TEST_CASE("generator matches the reference instance bit for bit") {
  CHECK(format_pcc(gen_hrd(1, 2)) == pcc::testing::kRef12);
}

TEST_CASE("smallest instance shapes") {
  const PartialMatrix m = gen_hrd(1, 1);
  CHECK(m.n_points == 3);
  CHECK(m.n_concepts() == 2);
  const auto rows = row_strings(m);
  CHECK(rows[0] == "100");
  CHECK(rows[1] == "011");
}

TEST_CASE("row structure invariants") {
  for (auto [r, d] : {std::pair<unsigned, unsigned>{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const PartialMatrix m = gen_hrd(r, d);
    const std::size_t base = std::size_t{d} << r;
    const std::size_t tail = std::size_t{d} * r;
    CHECK(m.n_points == base + tail);
    for (const auto& row : m.rows) {
      std::size_t ones = 0;
      for (std::size_t p = 0; p < base; ++p) {
        CHECK(row[p] != Cell::Star);
        ones += row[p] == Cell::One;
      }
      CHECK(ones == d);
      std::size_t tail_set = 0;
      for (std::size_t p = base; p < base + tail; ++p) tail_set += row[p] != Cell::Star;
      CHECK(tail_set <= 1);
    }
  }
}

TEST_CASE("generator guards") {
  CHECK_THROWS_AS(gen_hrd(0, 1), InvalidArgument);
  CHECK_THROWS_AS(gen_hrd(1, 0), InvalidArgument);
  CHECK_THROWS_AS(gen_hrd(8, 4), GuardExceeded);
}

TEST_CASE("biclique class construction") {
  LabeledGraph k3 = complete_graph(3);
  std::vector<OrientedBiclique> part{{{0}, {1, 2}}, {{1}, {2}}};
  const PartialMatrix m = gen_biclique_class(k3, part);
  const auto rows = row_strings(m);
  CHECK(rows == std::vector<std::string>{"011", "*01"});

  LabeledGraph edge = make_graph(2, {{0, 1}});
  const PartialMatrix one = gen_biclique_class(edge, {{{0}, {1}}});
  CHECK(row_strings(one) == std::vector<std::string>{"01"});

  // doubly covered edge {1,2}
  std::vector<OrientedBiclique> bad{{{0}, {1, 2}}, {{1}, {0, 2}}};
  CHECK_THROWS_WITH_AS(gen_biclique_class(k3, bad), doctest::Contains("{1,2}"), InvalidArgument);

  // uncovered edge
  std::vector<OrientedBiclique> missing{{{0}, {1, 2}}};
  CHECK_THROWS_AS(gen_biclique_class(k3, missing), InvalidArgument);
}

TEST_CASE("classes from edge partitions avoid the forbidden pattern") {
  for (std::size_t n = 3; n <= 6; ++n) {
    const PartialMatrix m = gen_biclique_class(complete_graph(n), star_partition(n));
    CHECK_FALSE(contains_pattern(m, ld3_forbidden_pattern()).has_value());
    CHECK(ld_dim(m) <= 2);
    CHECK(verify_ld_le_2(m));
  }
  CHECK_FALSE(verify_ld_le_2(mat({"10", "10"})));
}
