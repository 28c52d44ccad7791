#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "core/constructions.hpp"
#include "core/matrix.hpp"
#include "core/rng.hpp"
#include "core/verify.hpp"
#include "helpers.hpp"

using namespace pcc;
using pcc::testing::mat;

TEST_CASE("pcc format round trip and errors") {
  const PartialMatrix m = parse_pcc(pcc::testing::kRef12);
  CHECK(m.n_points == 6);
  CHECK(m.n_concepts() == 12);
  CHECK(format_pcc(m) == pcc::testing::kRef12);

  CHECK_THROWS_WITH_AS(parse_pcc("nope v1 2 2\n"), doctest::Contains("line 1"), ParseError);
  CHECK_THROWS_WITH_AS(parse_pcc("pcc v1 2 2\n01\n0\n"), doctest::Contains("line 3"), ParseError);
  CHECK_THROWS_WITH_AS(parse_pcc("pcc v1 2 1\n0x\n"), doctest::Contains("line 2"), ParseError);
  CHECK_THROWS_AS(parse_pcc("pcc v1 2 2\n01\n"), ParseError);
  CHECK_THROWS_AS(parse_pcc("pcc v1 2 1\n01\n10\n"), ParseError);
}

TEST_CASE("restrict keeps chosen columns in order") {
  const PartialMatrix m = gen_hrd(1, 2);
  const PartialMatrix left = restrict_points(m, {0, 1, 2, 3});
  CHECK(left.n_points == 4);
  CHECK(left.n_concepts() == 12);
  const auto rows = row_strings(left);
  CHECK(rows[0] == "1100");
  CHECK(rows[4] == "1001");
  CHECK(rows[11] == "0011");

  std::vector<std::size_t> all{0, 1, 2, 3, 4, 5};
  CHECK(format_pcc(restrict_points(m, all)) == format_pcc(m));

  const PartialMatrix empty = restrict_points(m, {});
  CHECK(empty.n_points == 0);
  CHECK(empty.n_concepts() == 12);

  CHECK_THROWS_AS(restrict_points(m, {6}), InvalidArgument);
  CHECK_THROWS_AS(restrict_points(m, {1, 1}), InvalidArgument);
}

TEST_CASE("dual transposes and is an involution") {
  const PartialMatrix m = gen_hrd(1, 2);
  const PartialMatrix d = dual(m);
  CHECK(d.n_points == 12);
  CHECK(d.n_concepts() == 6);
  CHECK(format_pcc(dual(d)) == format_pcc(m));

  const PartialMatrix small = mat({"1*", "01"});
  const auto rows = row_strings(dual(small));
  CHECK(rows == std::vector<std::string>{"10", "*1"});

  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    const PartialMatrix r = gen_random_partial(rng, 7, 9, 0.3);
    CHECK(format_pcc(dual(dual(r))) == format_pcc(r));
  }
}

TEST_CASE("restrict commutes with dual up to index transposition") {
  Rng rng(12);
  for (int t = 0; t < 20; ++t) {
    const PartialMatrix m = gen_random_partial(rng, 6, 8, 0.3);
    std::vector<std::size_t> pts = rng.sample(m.n_points, 1 + rng.index(m.n_points));
    const PartialMatrix lhs = dual(restrict_points(m, pts));
    const PartialMatrix rhs = pcc::testing::take_rows(dual(m), pts);
    CHECK(format_pcc(lhs) == format_pcc(rhs));
  }
}

TEST_CASE("pattern containment is order-preserving and Star never matches") {
  const Pattern p = pattern_from_strings({"10", "10"});

  const auto self = contains_pattern(mat({"10", "10"}), p);
  REQUIRE(self.has_value());
  CHECK(self->rows == std::vector<std::size_t>{0, 1});
  CHECK(self->cols == std::vector<std::size_t>{0, 1});

  CHECK_FALSE(contains_pattern(mat({"1*", "10"}), p).has_value());
  CHECK_FALSE(contains_pattern(mat({"10", "01"}), p).has_value());
  CHECK(contains_pattern(mat({"110", "011", "110"}), p).has_value());

  // 1x1 patterns are allowed
  CHECK(contains_pattern(mat({"0*", "*1"}), pattern_from_strings({"1"})).has_value());
  CHECK_FALSE(contains_pattern(mat({"***"}), pattern_from_strings({"0"})).has_value());
}

TEST_CASE("pattern containment is monotone under restriction") {
  Rng rng(13);
  const Pattern p = pattern_from_strings({"10", "10"});
  int seen = 0;
  for (int t = 0; t < 60; ++t) {
    const PartialMatrix m = gen_random_partial(rng, 6, 10, 0.2);
    if (m.n_points < 2) continue;
    std::vector<std::size_t> pts = rng.sample(m.n_points, 2 + rng.index(m.n_points - 1));
    if (contains_pattern(restrict_points(m, pts), p)) {
      ++seen;
      CHECK(contains_pattern(m, p).has_value());
    }
  }
  CHECK(seen > 0);
}

TEST_CASE("disambiguation check") {
  const PartialMatrix m = mat({"01", "1*"});
  const TotalMatrix t = to_total(mat({"01", "11"}));
  CHECK(is_disambiguation(m, t).ok);

  // any total class disambiguates itself
  Rng rng(14);
  for (int i = 0; i < 10; ++i) {
    const PartialMatrix r = gen_random_partial(rng, 5, 6, 0.0);
    CHECK(is_disambiguation(r, to_total(r)).ok);
  }

  const DisambiguationCheck bad = is_disambiguation(mat({"1*"}), to_total(mat({"00"})));
  CHECK_FALSE(bad.ok);
  CHECK(bad.row == 0);
  CHECK(bad.point == 0);

  CHECK_THROWS_AS(is_disambiguation(mat({"01"}), to_total(mat({"0"}))), InvalidArgument);
}

TEST_CASE("distinct rows and columns") {
  CHECK(distinct_rows(to_total(mat({"01", "01", "11"}))) == 2);
  CHECK(distinct_cols(to_total(mat({"100", "010", "001"}))) == 3);
  CHECK(distinct_rows(to_total(mat({""}))) == 1);
  CHECK_THROWS_AS(to_total(mat({"0*"})), InvalidArgument);
}
