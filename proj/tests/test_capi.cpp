#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "pcc.h"

namespace {

struct Str {
  char* s = nullptr;
  ~Str() { pcc_string_free(s); }
  std::string str() const { return s ? std::string(s) : std::string(); }
};

constexpr const char* kTiny =
    "pcc v1 2 3\n"
    "01\n"
    "1*\n"
    "00\n";

}  // namespace

TEST_CASE("matrix lifecycle and accessors") {
  pcc_matrix* m = nullptr;
  REQUIRE(pcc_matrix_parse(kTiny, &m) == PCC_OK);
  CHECK(pcc_matrix_n_points(m) == 2);
  CHECK(pcc_matrix_n_concepts(m) == 3);
  CHECK(pcc_matrix_cell(m, 0, 0) == 0);
  CHECK(pcc_matrix_cell(m, 0, 1) == 1);
  CHECK(pcc_matrix_cell(m, 1, 1) == 2);
  CHECK(pcc_matrix_cell(m, 9, 0) == -1);
  CHECK(pcc_matrix_is_total(m) == 0);

  Str text;
  CHECK(pcc_matrix_format(m, &text.s) == PCC_OK);
  CHECK(text.str() == kTiny);

  pcc_matrix* d = nullptr;
  REQUIRE(pcc_matrix_dual(m, &d) == PCC_OK);
  CHECK(pcc_matrix_n_points(d) == 3);
  pcc_matrix_free(d);
  pcc_matrix_free(m);
}

TEST_CASE("parse errors carry line numbers") {
  pcc_matrix* m = nullptr;
  CHECK(pcc_matrix_parse("garbage\n", &m) == PCC_ERR_PARSE);
  CHECK(std::string(pcc_last_error()).find("line 1") != std::string::npos);
}

TEST_CASE("dimensions through the C surface") {
  pcc_matrix* m = nullptr;
  REQUIRE(pcc_gen_hrd(1, 2, &m) == PCC_OK);

  int vc = 0;
  Str witness;
  CHECK(pcc_vc_dim(m, &vc, &witness.s) == PCC_OK);
  CHECK(vc >= 2);
  CHECK(witness.str().find("\"kind\":\"vc\"") != std::string::npos);

  int ld = 0;
  CHECK(pcc_ld_dim(m, &ld) == PCC_OK);
  CHECK(ld == 2);

  int shattered = 0;
  CHECK(pcc_ld_tree_oracle(m, 2, 0, &shattered, nullptr) == PCC_OK);
  CHECK(shattered == 1);

  int dual_vc = 0, holds = 0;
  CHECK(pcc_dual_vc_check(m, &vc, &dual_vc, &holds) == PCC_OK);
  CHECK(holds == 1);

  pcc_matrix_free(m);
}

TEST_CASE("soa and guards") {
  pcc_matrix* m = nullptr;
  REQUIRE(pcc_gen_hrd(1, 2, &m) == PCC_OK);
  Str trace;
  pcc_matrix* out = nullptr;
  REQUIRE(pcc_soa_disambiguate(m, nullptr, 0, &trace.s, &out) == PCC_OK);
  CHECK(pcc_matrix_is_total(out) == 1);
  int ok = 0;
  CHECK(pcc_matrix_is_disambiguation(m, out, &ok, nullptr) == PCC_OK);
  CHECK(ok == 1);
  size_t rows = 0;
  CHECK(pcc_matrix_distinct_rows(out, &rows) == PCC_OK);
  CHECK(rows == 6);
  pcc_matrix_free(out);

  // oracle guard: 9 points without force
  pcc_matrix* wide = nullptr;
  REQUIRE(pcc_matrix_parse("pcc v1 9 1\n000000000\n", &wide) == PCC_OK);
  int sh = 0;
  CHECK(pcc_ld_tree_oracle(wide, 1, 0, &sh, nullptr) == PCC_ERR_GUARD);
  CHECK(pcc_ld_tree_oracle(wide, 1, 1, &sh, nullptr) == PCC_OK);
  pcc_matrix_free(wide);
  pcc_matrix_free(m);
}

TEST_CASE("work budget maps to the guard status") {
  pcc_set_work_budget(5);
  pcc_matrix* m = nullptr;
  REQUIRE(pcc_gen_hrd(2, 2, &m) == PCC_OK);
  int ld = 0;
  CHECK(pcc_ld_dim(m, &ld) == PCC_ERR_GUARD);
  pcc_set_work_budget(0);
  CHECK(pcc_ld_dim(m, &ld) == PCC_OK);
  CHECK(ld == 3);
  pcc_matrix_free(m);
}

TEST_CASE("graph and comm round trips") {
  pcc_graph* g = nullptr;
  REQUIRE(pcc_graph_complete(4, &g) == PCC_OK);
  CHECK(pcc_graph_n_vertices(g) == 4);
  CHECK(pcc_graph_n_edges(g) == 6);

  int chi = 0;
  CHECK(pcc_chromatic_number(g, 0, &chi, nullptr) == PCC_OK);
  CHECK(chi == 4);

  int bp = 0;
  pcc_bicliques* part = nullptr;
  CHECK(pcc_biclique_partition_number(g, 0, &bp, &part) == PCC_OK);
  CHECK(bp == 3);
  int valid = 0;
  CHECK(pcc_validate_biclique_family(g, part, "partition", &valid, nullptr) == PCC_OK);
  CHECK(valid == 1);
  pcc_bicliques_free(part);

  int bound = 0;
  CHECK(pcc_bp_spectral_lower_bound(g, &bound) == PCC_OK);
  CHECK(bound == 3);
  pcc_graph_free(g);

  pcc_comm* c = nullptr;
  REQUIRE(pcc_comm_parse("comm v1 2 2\n10\n01\n", &c) == PCC_OK);
  int count = 0;
  Str rects;
  CHECK(pcc_cover_number(c, 0, "cover", 0, &count, &rects.s) == PCC_OK);
  CHECK(count == 2);

  Str report;
  pcc_graph* og = nullptr;
  pcc_bicliques* op = nullptr;
  int pass_unused = 0;
  (void)pass_unused;
  CHECK(pcc_ass_pipeline(c, 0, &report.s, &og, &op) == PCC_OK);
  CHECK(report.str().find("\"branch\"") != std::string::npos);
  pcc_graph_free(og);
  pcc_bicliques_free(op);
  pcc_comm_free(c);
}

TEST_CASE("boolean functions") {
  pcc_boolfun* f = nullptr;
  REQUIRE(pcc_bf_parse("bf v1 2\n0001\n", &f) == PCC_OK);
  int cer = 0;
  Str worst;
  CHECK(pcc_cert_complexity(f, 1, 0, &cer, &worst.s) == PCC_OK);
  CHECK(cer == 2);
  CHECK(worst.str() == "11");
  int uc = 0;
  CHECK(pcc_uc_complexity(f, 1, "partition", 0, &uc, nullptr) == PCC_OK);
  CHECK(uc == 2);

  pcc_comm* eq = nullptr;
  REQUIRE(pcc_comm_parse("comm v1 2 2\n10\n01\n", &eq) == PCC_OK);
  pcc_comm* lifted = nullptr;
  CHECK(pcc_lift(f, eq, 0, &lifted) == PCC_OK);
  CHECK(pcc_comm_rows(lifted) == 4);
  Str rects;
  CHECK(pcc_certificates_to_partition(f, 1, eq, 0, &rects.s) == PCC_OK);
  CHECK(!rects.str().empty());
  pcc_comm_free(lifted);
  pcc_comm_free(eq);
  pcc_bf_free(f);
}

TEST_CASE("convert and verify") {
  Str json;
  REQUIRE(pcc_convert(kTiny, "json", &json.s) == PCC_OK);
  Str back;
  REQUIRE(pcc_convert(json.str().c_str(), "pcc", &back.s) == PCC_OK);
  CHECK(back.str() == kTiny);

  Str bad;
  CHECK(pcc_convert("graph v1 1 0\n", "pcc", &bad.s) == PCC_ERR_INVALID);

  Str report;
  int pass = 0;
  REQUIRE(pcc_verify_run("fig1", nullptr, 0, "/tmp", &report.s, &pass) == PCC_OK);
  CHECK(pass == 1);
  CHECK(report.str().find("\"status\": \"pass\"") != std::string::npos);

  CHECK(pcc_verify_run("nope", nullptr, 0, "/tmp", nullptr, &pass) == PCC_ERR_INVALID);
  CHECK(std::string(pcc_last_error()).find("unknown check id") != std::string::npos);
}
