#include "core/verify.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include "core/commlift.hpp"
#include "core/constructions.hpp"
#include "core/dimensions.hpp"
#include "core/disambiguation.hpp"
#include "core/graphtools.hpp"

namespace pcc {

ordered_json VerifyReport::to_json() const {
  ordered_json j;
  j["check_id"] = check_id;
  j["status"] = pass ? "pass" : "fail";
  j["details"] = details;
  j["runtime_ms"] = runtime_ms;
  return j;
}

PartialMatrix gen_random_partial(Rng& rng, std::size_t max_points, std::size_t max_concepts,
                                 double star_density) {
  PartialMatrix m;
  m.n_points = 1 + rng.index(max_points);
  const std::size_t rows = 1 + rng.index(max_concepts);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Cell> row(m.n_points);
    for (std::size_t p = 0; p < m.n_points; ++p) {
      if (rng.chance(star_density))
        row[p] = Cell::Star;
      else
        row[p] = rng.chance(0.5) ? Cell::One : Cell::Zero;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

LabeledGraph gen_random_graph(Rng& rng, std::size_t max_n, double edge_prob) {
  const std::size_t n = 2 + rng.index(max_n - 1);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (rng.chance(edge_prob)) edges.emplace_back(u, v);
  return make_graph(n, std::move(edges));
}

namespace {

// Reference instance with r=1, d=2: 12 concepts on 6 points, and the
// deterministic fill of the eight starred cells in rows 1..8.
constexpr const char* kRef12 =
    "pcc v1 6 12\n"
    "11000*\n"
    "1100*0\n"
    "10100*\n"
    "1010*1\n"
    "10011*\n"
    "1001*0\n"
    "01101*\n"
    "0110*1\n"
    "0101**\n"
    "0101**\n"
    "0011**\n"
    "0011**\n";

constexpr int kRef12Fill[8] = {0, 0, 1, 0, 0, 1, 1, 1};

constexpr const char* kRef12FilledRows[8] = {"110000", "110000", "101001", "101001",
                                             "100110", "100110", "011011", "011011"};

std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t binom_sum(std::uint64_t n, std::int64_t d) {
  std::uint64_t s = 0;
  for (std::int64_t i = 0; i <= d; ++i) s += binom(n, static_cast<std::uint64_t>(i));
  return s;
}

std::string write_artifact(const std::string& dir, const std::string& name,
                           const std::string& content) {
  const std::string base = dir.empty() ? std::string(".") : dir;
  std::error_code ec;
  std::filesystem::create_directories(base, ec);
  const std::string path = base + "/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

// true iff every 0/1 pattern over `points` appears among the rows
bool points_shattered(const TotalMatrix& t, const std::vector<std::size_t>& points) {
  const std::size_t d = points.size();
  for (std::size_t pat = 0; pat < (std::size_t{1} << d); ++pat) {
    bool found = false;
    for (const auto& row : t.rows) {
      bool match = true;
      for (std::size_t j = 0; j < d && match; ++j)
        match = row[points[j]] == (((pat >> (d - 1 - j)) & 1) ? 1 : 0);
      if (match) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct CheckCtx {
  const ordered_json& params;
  std::uint64_t seed;
  std::string artifact_dir;
  ordered_json details;
  bool pass = true;

  std::size_t param(const char* key, std::size_t dflt) const {
    if (params.contains(key)) return params.at(key).get<std::size_t>();
    return dflt;
  }

  void fail(const std::string& why) {
    pass = false;
    if (!details.contains("failures")) details["failures"] = ordered_json::array();
    details["failures"].push_back(why);
  }

  void fail_with_matrix(const std::string& why, const std::string& name, const PartialMatrix& m) {
    fail(why);
    details["counterexample"] = write_artifact(artifact_dir, name, format_pcc(m));
  }
};

void check_fig1(CheckCtx& ctx) {
  const PartialMatrix m = gen_hrd(1, 2);
  const std::string emitted = format_pcc(m);
  if (emitted != kRef12) {
    ctx.fail("generated 12x6 matrix differs from the reference instance");
    ctx.details["counterexample"] =
        write_artifact(ctx.artifact_dir, "fig1_generated.pcc", emitted);
    return;
  }
  const SoaTrace trace = soa_disambiguate(m);
  ordered_json fills = ordered_json::array();
  for (std::size_t r = 0; r < 8; ++r) {
    std::size_t star_col = 0;
    for (std::size_t p = 0; p < m.n_points; ++p)
      if (m.rows[r][p] == Cell::Star) star_col = p;
    const int got = trace.output.rows[r][star_col];
    ordered_json e;
    e["row"] = r + 1;
    e["point"] = star_col + 1;
    e["value"] = got;
    fills.push_back(std::move(e));
    if (got != kRef12Fill[r])
      ctx.fail("row " + std::to_string(r + 1) + " filled with " + std::to_string(got) +
               ", expected " + std::to_string(kRef12Fill[r]));
    std::string row_str(m.n_points, '0');
    for (std::size_t p = 0; p < m.n_points; ++p)
      row_str[p] = trace.output.rows[r][p] ? '1' : '0';
    if (row_str != kRef12FilledRows[r])
      ctx.fail("row " + std::to_string(r + 1) + " disambiguated to " + row_str);
  }
  ctx.details["filled_cells"] = std::move(fills);
  if (!ctx.pass)
    ctx.details["counterexample"] =
        write_artifact(ctx.artifact_dir, "fig1_soa.pcc", format_pcc(trace.output));
}

const std::vector<std::pair<unsigned, unsigned>> kHrdParams = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};

void check_hrd_ld(CheckCtx& ctx) {
  ordered_json rows = ordered_json::array();
  for (auto [r, d] : kHrdParams) {
    const PartialMatrix m = gen_hrd(r, d);
    const int ld = ld_dim(m);
    ordered_json e;
    e["r"] = r;
    e["d"] = d;
    e["ld"] = ld;
    rows.push_back(std::move(e));
    if (ld < static_cast<int>(d) || ld > static_cast<int>(d) + 1)
      ctx.fail_with_matrix("ld_dim out of [d, d+1] for r=" + std::to_string(r) +
                               " d=" + std::to_string(d) + ": " + std::to_string(ld),
                           "hrd_ld_fail.pcc", m);
  }
  ctx.details["instances"] = std::move(rows);
}

void check_hrd_soa_vc(CheckCtx& ctx) {
  ordered_json rows = ordered_json::array();
  for (auto [r, d] : kHrdParams) {
    const PartialMatrix m = gen_hrd(r, d);
    const SoaTrace trace = soa_disambiguate(m);
    const std::size_t base = std::size_t{d} << r;
    const std::size_t dr = std::size_t{d} * r;
    std::vector<std::size_t> tail(dr);
    for (std::size_t i = 0; i < dr; ++i) tail[i] = base + i;

    const bool shattered = points_shattered(trace.output, tail);
    const int vc = vc_dim(trace.output.as_partial()).dim;
    const std::size_t distinct = distinct_rows(trace.output);

    // the filled first concept of each low index realizes its own bit pattern
    bool realizers_ok = true;
    for (std::size_t i = 1; i <= (std::size_t{1} << dr); ++i) {
      const auto& row = trace.output.rows[(i - 1) * dr];
      for (std::size_t j = 0; j < dr; ++j)
        realizers_ok = realizers_ok && row[base + j] == (((i - 1) >> (dr - 1 - j)) & 1 ? 1 : 0);
    }

    ordered_json e;
    e["r"] = r;
    e["d"] = d;
    e["tail_shattered"] = shattered;
    e["tail_realizers_structured"] = realizers_ok;
    e["vc_of_output"] = vc;
    e["distinct_rows"] = distinct;
    rows.push_back(std::move(e));

    if (!realizers_ok)
      ctx.fail("filled low-index concepts do not carry their own bit patterns for r=" +
               std::to_string(r) + " d=" + std::to_string(d));
    if (!shattered)
      ctx.fail_with_matrix("tail points not shattered for r=" + std::to_string(r) +
                               " d=" + std::to_string(d),
                           "hrd_soa_fail.pcc", trace.output.as_partial());
    if (vc < static_cast<int>(dr))
      ctx.fail("vc of the filled class below d*r for r=" + std::to_string(r) +
               " d=" + std::to_string(d));
    if (distinct < (std::size_t{1} << dr))
      ctx.fail("fewer than 2^(d*r) distinct rows for r=" + std::to_string(r) +
               " d=" + std::to_string(d));
  }
  ctx.details["instances"] = std::move(rows);
}

void check_ssp_partial(CheckCtx& ctx) {
  const std::size_t trials = ctx.param("trials", 50);
  const std::size_t max_points = ctx.param("n", 10);
  const std::size_t max_concepts = ctx.param("concepts", 30);
  Rng rng(ctx.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PartialMatrix m = gen_random_partial(rng, max_points, max_concepts, 0.3);
    LdMemo memo;
    const int ld = ld_dim(m, memo);
    const int vc = vc_dim(m).dim;
    if (vc > ld) {
      ctx.fail_with_matrix("vc_dim " + std::to_string(vc) + " exceeds ld_dim " +
                               std::to_string(ld) + " at trial " + std::to_string(t),
                           "ssp_fail.pcc", m);
      continue;
    }
    SoaTrace trace;
    try {
      trace = soa_disambiguate(m);
    } catch (const CheckFailed& e) {
      ctx.fail_with_matrix(std::string("soa progress assertion fired: ") + e.what(),
                           "ssp_fail.pcc", m);
      continue;
    }
    const std::size_t rows = distinct_rows(trace.output);
    const std::uint64_t bound = binom_sum(m.n_points, ld);
    if (rows > bound)
      ctx.fail_with_matrix("disambiguation has " + std::to_string(rows) +
                               " distinct rows, bound " + std::to_string(bound) + " at trial " +
                               std::to_string(t),
                           "ssp_fail.pcc", m);
  }
  ctx.details["trials"] = trials;
  ctx.details["seed"] = ctx.seed;
}

void check_vc_le_ld(CheckCtx& ctx) {
  const std::size_t trials = ctx.param("trials", 100);
  const std::size_t max_points = ctx.param("n", 6);
  const std::size_t max_concepts = ctx.param("concepts", 16);
  Rng rng(ctx.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PartialMatrix m = gen_random_partial(rng, max_points, max_concepts, 0.3);
    const int ld = ld_dim(m);
    const int vc = vc_dim(m).dim;
    if (vc > ld)
      ctx.fail_with_matrix(
          "vc_dim " + std::to_string(vc) + " exceeds ld_dim " + std::to_string(ld),
          "vc_le_ld_fail.pcc", m);
    // exhaustive tree search must accept exactly the depths up to ld
    int max_accepted = -1;
    for (int dd = 0; dd <= static_cast<int>(m.n_points) + 1; ++dd) {
      const LdOracleResult r = ld_dim_tree_oracle(m, dd);
      if (!r.shattered) break;
      if (!validate_shattered_tree(m, *r.witness)) {
        ctx.fail_with_matrix("tree witness failed revalidation at depth " + std::to_string(dd),
                             "vc_le_ld_fail.pcc", m);
        break;
      }
      max_accepted = dd;
    }
    if (max_accepted != ld)
      ctx.fail_with_matrix("tree search accepts depth " + std::to_string(max_accepted) +
                               " but the recursion says " + std::to_string(ld),
                           "vc_le_ld_fail.pcc", m);
  }
  ctx.details["trials"] = trials;
  ctx.details["seed"] = ctx.seed;
}

void check_biclique_ld2(CheckCtx& ctx) {
  ordered_json rows = ordered_json::array();
  for (std::size_t n = 3; n <= 5; ++n) {
    const LabeledGraph g = complete_graph(n);
    const PartialMatrix m = gen_biclique_class(g, star_partition(n));
    const bool ok = verify_ld_le_2(m);
    const bool pattern = contains_pattern(m, ld3_forbidden_pattern()).has_value();
    ordered_json e;
    e["n"] = n;
    e["ld_le_2"] = ok;
    e["forbidden_pattern"] = pattern;
    rows.push_back(std::move(e));
    if (!ok || pattern)
      ctx.fail_with_matrix("class from the K" + std::to_string(n) + " star partition failed",
                           "biclique_ld2_fail.pcc", m);
  }
  ctx.details["instances"] = std::move(rows);
}

void check_chi_columns(CheckCtx& ctx) {
  ordered_json rows = ordered_json::array();
  for (std::size_t n : {std::size_t{3}, std::size_t{4}}) {
    const LabeledGraph g = complete_graph(n);
    const PartialMatrix m = gen_biclique_class(g, star_partition(n));
    const int chi = chromatic_number(g).chi;

    std::vector<std::pair<std::size_t, std::size_t>> stars;
    for (std::size_t r = 0; r < m.n_concepts(); ++r)
      for (std::size_t p = 0; p < m.n_points; ++p)
        if (m.rows[r][p] == Cell::Star) stars.emplace_back(r, p);

    std::size_t min_cols = SIZE_MAX;
    for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << stars.size()); ++fill) {
      PartialMatrix filled = m;
      for (std::size_t s = 0; s < stars.size(); ++s)
        filled.rows[stars[s].first][stars[s].second] =
            ((fill >> s) & 1) ? Cell::One : Cell::Zero;
      min_cols = std::min(min_cols, distinct_cols(to_total(filled)));
    }
    const MinVcResult mv = min_vc_disambiguation(m);

    ordered_json e;
    e["n"] = n;
    e["chi"] = chi;
    e["completions"] = std::uint64_t{1} << stars.size();
    e["min_distinct_cols"] = min_cols;
    e["vc_min"] = mv.vc_min;
    rows.push_back(std::move(e));
    if (min_cols < static_cast<std::size_t>(chi))
      ctx.fail_with_matrix("a completion of the K" + std::to_string(n) +
                               " class has fewer distinct columns than chi",
                           "chi_columns_fail.pcc", m);
  }
  ctx.details["instances"] = std::move(rows);
}

void check_lemma_ass(CheckCtx& ctx) {
  struct Inst {
    const char* name;
    CommMatrix h;
  };
  CommMatrix id2;
  id2.n_rows = id2.n_cols = 2;
  id2.cells = {{1, 0}, {0, 1}};
  CommMatrix eq4;
  eq4.n_rows = eq4.n_cols = 4;
  eq4.cells.assign(4, std::vector<std::uint8_t>(4, 0));
  for (std::size_t i = 0; i < 4; ++i) eq4.cells[i][i] = 1;
  std::vector<Inst> insts;
  insts.push_back({"identity-2", std::move(id2)});
  insts.push_back({"equality-4", std::move(eq4)});

  ordered_json rows = ordered_json::array();
  for (const auto& inst : insts) {
    try {
      const AssPipelineResult res = ass_pipeline(inst.h);
      ordered_json e;
      e["instance"] = inst.name;
      e["report"] = ass_report_json(res.report);
      rows.push_back(std::move(e));
      if (res.report.chi_out < static_cast<int>(isqrt_ceil(res.report.c)))
        ctx.fail(std::string(inst.name) + ": output chromatic number below ceil(sqrt(c))");
      if (res.report.bp_size >
          static_cast<std::size_t>(res.report.m) * static_cast<std::size_t>(res.report.m))
        ctx.fail(std::string(inst.name) + ": partition larger than m^2");
    } catch (const CheckFailed& e) {
      ctx.fail(std::string(inst.name) + ": " + e.what());
    }
  }
  ctx.details["instances"] = std::move(rows);
}

void check_dual_vc(CheckCtx& ctx) {
  const std::size_t trials = ctx.param("trials", 30);
  const std::size_t max_points = ctx.param("n", 8);
  const std::size_t max_concepts = ctx.param("concepts", 16);
  Rng rng(ctx.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const PartialMatrix m = gen_random_partial(rng, max_points, max_concepts, 0.3);
    const DualVcResult r = dual_vc_check(m);
    if (!r.bound_holds)
      ctx.fail_with_matrix("dual vc " + std::to_string(r.dual_vc) + " exceeds 2^(vc+1)-1 with vc " +
                               std::to_string(r.vc) + " at trial " + std::to_string(t),
                           "dual_vc_fail.pcc", m);
  }
  ctx.details["trials"] = trials;
  ctx.details["seed"] = ctx.seed;
}

void check_gp_bp(CheckCtx& ctx) {
  ordered_json complete = ordered_json::array();
  for (std::size_t n = 1; n <= 5; ++n) {
    const LabeledGraph g = complete_graph(n);
    const int chi = chromatic_number(g).chi;
    const BpResult bp = biclique_partition_number(g);
    ordered_json e;
    e["n"] = n;
    e["chi"] = chi;
    e["bp"] = bp.bp;
    complete.push_back(std::move(e));
    if (chi != static_cast<int>(n))
      ctx.fail("chi(K" + std::to_string(n) + ") = " + std::to_string(chi));
    if (bp.bp != static_cast<int>(n) - 1 && n > 1)
      ctx.fail("bp(K" + std::to_string(n) + ") = " + std::to_string(bp.bp));
    if (n == 1 && bp.bp != 0) ctx.fail("bp(K1) nonzero");
  }
  ctx.details["complete_graphs"] = std::move(complete);

  const std::size_t trials = ctx.param("trials", 30);
  Rng rng(ctx.seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const LabeledGraph g = gen_random_graph(rng, 8, 0.5);
    const int lb = bp_spectral_lower_bound(g);
    const BpResult bp = biclique_partition_number(g);
    if (lb > bp.bp) {
      ctx.fail("spectral bound " + std::to_string(lb) + " exceeds bp " + std::to_string(bp.bp) +
               " at trial " + std::to_string(t));
      ctx.details["counterexample"] =
          write_artifact(ctx.artifact_dir, "gp_bp_fail.graph", format_graph(g));
    }
    const FamilyCheck check = validate_biclique_family(g, bp.partition, FamilyMode::Partition);
    if (!check.ok) ctx.fail("returned partition invalid: " + check.reason);
  }
  ctx.details["trials"] = trials;
  ctx.details["seed"] = ctx.seed;
}

}  // namespace

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = {"fig1",         "hrd-ld",   "hrd-soa-vc",
                                               "ssp-partial",  "vc-le-ld", "biclique-ld2",
                                               "chi-columns",  "lemma-ass", "dual-vc",
                                               "gp-bp"};
  return ids;
}

VerifyReport run_check(const std::string& check_id, const ordered_json& params,
                       std::uint64_t seed, const std::string& artifact_dir) {
  const auto start = std::chrono::steady_clock::now();
  CheckCtx ctx{params, seed, artifact_dir, ordered_json::object(), true};

  if (check_id == "fig1")
    check_fig1(ctx);
  else if (check_id == "hrd-ld")
    check_hrd_ld(ctx);
  else if (check_id == "hrd-soa-vc")
    check_hrd_soa_vc(ctx);
  else if (check_id == "ssp-partial")
    check_ssp_partial(ctx);
  else if (check_id == "vc-le-ld")
    check_vc_le_ld(ctx);
  else if (check_id == "biclique-ld2")
    check_biclique_ld2(ctx);
  else if (check_id == "chi-columns")
    check_chi_columns(ctx);
  else if (check_id == "lemma-ass")
    check_lemma_ass(ctx);
  else if (check_id == "dual-vc")
    check_dual_vc(ctx);
  else if (check_id == "gp-bp")
    check_gp_bp(ctx);
  else
    throw InvalidArgument("unknown check id '" + check_id + "'");

  VerifyReport report;
  report.check_id = check_id;
  report.pass = ctx.pass;
  report.details = std::move(ctx.details);
  report.runtime_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            start)
          .count());
  return report;
}

}  // namespace pcc
