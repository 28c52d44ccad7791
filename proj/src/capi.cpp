#include "pcc.h"

#include <cstring>
#include <string>

#include "core/budget.hpp"
#include "core/commlift.hpp"
#include "core/constructions.hpp"
#include "core/convert.hpp"
#include "core/dimensions.hpp"
#include "core/disambiguation.hpp"
#include "core/graphtools.hpp"
#include "core/report.hpp"
#include "core/verify.hpp"

struct pcc_matrix {
  pcc::PartialMatrix m;
};
struct pcc_graph {
  pcc::LabeledGraph g;
};
struct pcc_bicliques {
  std::size_t n_vertices = 0;
  std::vector<pcc::OrientedBiclique> family;
};
struct pcc_comm {
  pcc::CommMatrix m;
};
struct pcc_boolfun {
  pcc::BoolFunction f;
};

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_out(char** slot, const std::string& s) {
  if (slot) *slot = dup_string(s);
}

// Maps core exceptions onto status codes; every API body runs inside this.
template <typename Fn>
pcc_status guarded(Fn&& fn) {
  try {
    pcc::budget::reset();
    fn();
    return PCC_OK;
  } catch (const pcc::ParseError& e) {
    t_last_error = e.what();
    return PCC_ERR_PARSE;
  } catch (const pcc::GuardExceeded& e) {
    t_last_error = e.what();
    return PCC_ERR_GUARD;
  } catch (const pcc::CheckFailed& e) {
    t_last_error = e.what();
    return PCC_ERR_CHECK;
  } catch (const pcc::InvalidArgument& e) {
    t_last_error = e.what();
    return PCC_ERR_INVALID;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return PCC_ERR_INVALID;
  }
}

pcc_status require(bool cond, const char* msg) {
  if (cond) return PCC_OK;
  t_last_error = msg;
  return PCC_ERR_INVALID;
}

}  // namespace

extern "C" {

const char* pcc_last_error(void) { return t_last_error.c_str(); }

void pcc_string_free(char* s) { std::free(s); }

void pcc_set_work_budget(uint64_t max_nodes) { pcc::budget::set_limit(max_nodes); }

/* ---------------- matrices ---------------- */

pcc_status pcc_matrix_parse(const char* text, pcc_matrix** out) {
  if (require(text && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_matrix{pcc::parse_pcc(text)}; });
}

pcc_status pcc_matrix_format(const pcc_matrix* m, char** out) {
  if (require(m && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::format_pcc(m->m)); });
}

void pcc_matrix_free(pcc_matrix* m) { delete m; }

size_t pcc_matrix_n_points(const pcc_matrix* m) { return m ? m->m.n_points : 0; }

size_t pcc_matrix_n_concepts(const pcc_matrix* m) { return m ? m->m.n_concepts() : 0; }

int pcc_matrix_cell(const pcc_matrix* m, size_t row, size_t point) {
  if (!m || row >= m->m.n_concepts() || point >= m->m.n_points) return -1;
  return static_cast<int>(m->m.rows[row][point]);
}

int pcc_matrix_is_total(const pcc_matrix* m) { return m && m->m.is_total() ? 1 : 0; }

pcc_status pcc_matrix_restrict(const pcc_matrix* m, const size_t* points, size_t n_points,
                               pcc_matrix** out) {
  if (require(m && out && (points || n_points == 0), "null argument") != PCC_OK)
    return PCC_ERR_INVALID;
  return guarded([&] {
    std::vector<std::size_t> pts(points, points + n_points);
    *out = new pcc_matrix{pcc::restrict_points(m->m, pts)};
  });
}

pcc_status pcc_matrix_dual(const pcc_matrix* m, pcc_matrix** out) {
  if (require(m && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_matrix{pcc::dual(m->m)}; });
}

pcc_status pcc_matrix_contains_pattern(const pcc_matrix* m, const pcc_matrix* pattern, int* found,
                                       char** witness_json) {
  if (require(m && pattern && found, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    std::vector<std::string> rows = pcc::row_strings(pattern->m);
    const pcc::Pattern p = pcc::pattern_from_strings(rows);
    const auto w = pcc::contains_pattern(m->m, p);
    *found = w.has_value() ? 1 : 0;
    if (w) set_out(witness_json, pcc::pattern_witness_json(*w).dump());
  });
}

pcc_status pcc_matrix_is_disambiguation(const pcc_matrix* partial, const pcc_matrix* total,
                                        int* ok, char** violation_json) {
  if (require(partial && total && ok, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::TotalMatrix t = pcc::to_total(total->m);
    const pcc::DisambiguationCheck check = pcc::is_disambiguation(partial->m, t);
    *ok = check.ok ? 1 : 0;
    if (!check.ok) {
      pcc::ordered_json j;
      j["row"] = check.row + 1;
      j["point"] = check.point + 1;
      set_out(violation_json, j.dump());
    }
  });
}

pcc_status pcc_matrix_distinct_rows(const pcc_matrix* total, size_t* out) {
  if (require(total && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = pcc::distinct_rows(pcc::to_total(total->m)); });
}

pcc_status pcc_matrix_distinct_cols(const pcc_matrix* total, size_t* out) {
  if (require(total && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = pcc::distinct_cols(pcc::to_total(total->m)); });
}

/* ---------------- dimensions ---------------- */

pcc_status pcc_vc_dim(const pcc_matrix* m, int* dim, char** witness_json) {
  if (require(m && dim, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::VcResult r = pcc::vc_dim(m->m);
    *dim = r.dim;
    set_out(witness_json, pcc::shattered_set_json(r.witness, r.dim).dump());
  });
}

pcc_status pcc_ld_dim(const pcc_matrix* m, int* dim) {
  if (require(m && dim, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *dim = pcc::ld_dim(m->m); });
}

pcc_status pcc_ld_tree_oracle(const pcc_matrix* m, int depth, int force, int* shattered,
                              char** witness_json) {
  if (require(m && shattered, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::LdOracleResult r = pcc::ld_dim_tree_oracle(m->m, depth, force != 0);
    *shattered = r.shattered ? 1 : 0;
    if (r.witness) set_out(witness_json, pcc::shattered_tree_json(*r.witness).dump());
  });
}

pcc_status pcc_dual_vc_check(const pcc_matrix* m, int* vc, int* dual_vc, int* bound_holds) {
  if (require(m && vc && dual_vc && bound_holds, "null argument") != PCC_OK)
    return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::DualVcResult r = pcc::dual_vc_check(m->m);
    *vc = r.vc;
    *dual_vc = r.dual_vc;
    *bound_holds = r.bound_holds ? 1 : 0;
  });
}

/* ---------------- disambiguation ---------------- */

pcc_status pcc_soa_disambiguate(const pcc_matrix* m, const size_t* order, size_t order_len,
                                char** trace_json, pcc_matrix** output) {
  if (require(m, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    std::vector<std::size_t> ord;
    const std::vector<std::size_t>* ord_ptr = nullptr;
    if (order) {
      ord.assign(order, order + order_len);
      ord_ptr = &ord;
    }
    const pcc::SoaTrace t = pcc::soa_disambiguate(m->m, ord_ptr);
    if (trace_json) set_out(trace_json, pcc::soa_trace_json(t).dump());
    if (output) *output = new pcc_matrix{t.output.as_partial()};
  });
}

pcc_status pcc_min_vc_disambiguation(const pcc_matrix* m, int force, int* vc_min,
                                     pcc_matrix** witness) {
  if (require(m && vc_min, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::MinVcResult r = pcc::min_vc_disambiguation(m->m, force != 0);
    *vc_min = r.vc_min;
    if (witness) *witness = new pcc_matrix{r.witness.as_partial()};
  });
}

pcc_status pcc_growth_profile(const pcc_matrix* m, const size_t* sizes, size_t n_sizes,
                              uint64_t seed, char** json) {
  if (require(m && json && (sizes || n_sizes == 0), "null argument") != PCC_OK)
    return PCC_ERR_INVALID;
  return guarded([&] {
    pcc::Rng rng(seed);
    std::vector<std::size_t> ks(sizes, sizes + n_sizes);
    const auto profile = pcc::growth_profile(m->m, ks, rng);
    set_out(json, pcc::growth_json(profile).dump());
  });
}

/* ---------------- constructions ---------------- */

pcc_status pcc_gen_hrd(unsigned r, unsigned d, pcc_matrix** out) {
  if (require(out != nullptr, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_matrix{pcc::gen_hrd(r, d)}; });
}

pcc_status pcc_gen_biclique_class(const pcc_graph* g, const pcc_bicliques* partition,
                                  pcc_matrix** out) {
  if (require(g && partition && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_matrix{pcc::gen_biclique_class(g->g, partition->family)}; });
}

pcc_status pcc_verify_ld_le_2(const pcc_matrix* m, int* ok) {
  if (require(m && ok, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *ok = pcc::verify_ld_le_2(m->m) ? 1 : 0; });
}

/* ---------------- graphs ---------------- */

pcc_status pcc_graph_parse(const char* text, pcc_graph** out) {
  if (require(text && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_graph{pcc::parse_graph(text)}; });
}

pcc_status pcc_graph_format(const pcc_graph* g, char** out) {
  if (require(g && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::format_graph(g->g)); });
}

pcc_status pcc_graph_to_dot(const pcc_graph* g, char** out) {
  if (require(g && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::to_dot(g->g)); });
}

void pcc_graph_free(pcc_graph* g) { delete g; }

size_t pcc_graph_n_vertices(const pcc_graph* g) { return g ? g->g.n : 0; }

size_t pcc_graph_n_edges(const pcc_graph* g) { return g ? g->g.edges.size() : 0; }

pcc_status pcc_graph_complete(size_t n, pcc_graph** out) {
  if (require(out != nullptr, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_graph{pcc::complete_graph(n)}; });
}

pcc_status pcc_chromatic_number(const pcc_graph* g, int force, int* chi, char** coloring_json) {
  if (require(g && chi, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::ColoringResult r = pcc::chromatic_number(g->g, force != 0);
    *chi = r.chi;
    set_out(coloring_json, pcc::coloring_json(r).dump());
  });
}

pcc_status pcc_biclique_partition_number(const pcc_graph* g, int force, int* bp,
                                         pcc_bicliques** partition) {
  if (require(g && bp, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::BpResult r = pcc::biclique_partition_number(g->g, force != 0);
    *bp = r.bp;
    if (partition) *partition = new pcc_bicliques{g->g.n, r.partition};
  });
}

pcc_status pcc_bp_spectral_lower_bound(const pcc_graph* g, int* bound) {
  if (require(g && bound, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *bound = pcc::bp_spectral_lower_bound(g->g); });
}

pcc_status pcc_bicliques_parse(const char* text, pcc_bicliques** out) {
  if (require(text && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::BicliqueFile f = pcc::parse_bcp(text);
    *out = new pcc_bicliques{f.n_vertices, f.bicliques};
  });
}

pcc_status pcc_bicliques_format(const pcc_bicliques* b, char** out) {
  if (require(b && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    *out = dup_string(pcc::format_bcp(pcc::BicliqueFile{b->n_vertices, b->family}));
  });
}

void pcc_bicliques_free(pcc_bicliques* b) { delete b; }

size_t pcc_bicliques_count(const pcc_bicliques* b) { return b ? b->family.size() : 0; }

pcc_status pcc_bicliques_star(size_t n, pcc_bicliques** out) {
  if (require(out != nullptr, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_bicliques{n, pcc::star_partition(n)}; });
}

pcc_status pcc_validate_biclique_family(const pcc_graph* g, const pcc_bicliques* family,
                                        const char* mode, int* ok, char** violation_json) {
  if (require(g && family && mode && ok, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::FamilyCheck check =
        pcc::validate_biclique_family(g->g, family->family, pcc::family_mode_from_string(mode));
    *ok = check.ok ? 1 : 0;
    if (!check.ok) {
      pcc::ordered_json j;
      j["reason"] = check.reason;
      if (check.edge) j["edge"] = {check.edge->first + 1, check.edge->second + 1};
      set_out(violation_json, j.dump());
    }
  });
}

/* ---------------- communication ---------------- */

pcc_status pcc_comm_parse(const char* text, pcc_comm** out) {
  if (require(text && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_comm{pcc::parse_comm(text)}; });
}

pcc_status pcc_comm_format(const pcc_comm* m, char** out) {
  if (require(m && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::format_comm(m->m)); });
}

void pcc_comm_free(pcc_comm* m) { delete m; }

size_t pcc_comm_rows(const pcc_comm* m) { return m ? m->m.n_rows : 0; }

size_t pcc_comm_cols(const pcc_comm* m) { return m ? m->m.n_cols : 0; }

int pcc_comm_cell(const pcc_comm* m, size_t r, size_t c) {
  if (!m || r >= m->m.n_rows || c >= m->m.n_cols) return -1;
  return m->m.cells[r][c];
}

pcc_status pcc_bf_parse(const char* text, pcc_boolfun** out) {
  if (require(text && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_boolfun{pcc::parse_bf(text)}; });
}

pcc_status pcc_bf_format(const pcc_boolfun* f, char** out) {
  if (require(f && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::format_bf(f->f)); });
}

void pcc_bf_free(pcc_boolfun* f) { delete f; }

pcc_status pcc_cert_complexity(const pcc_boolfun* f, int b, int force, int* cer,
                               char** worst_input) {
  if (require(f && cer, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::CertResult r = pcc::cert_complexity(f->f, b, force != 0);
    *cer = r.cer;
    if (worst_input) {
      if (r.worst) {
        std::string s(f->f.n, '0');
        for (unsigned j = 0; j < f->f.n; ++j)
          if (pcc::BoolFunction::bit(*r.worst, f->f.n, j)) s[j] = '1';
        *worst_input = dup_string(s);
      } else {
        *worst_input = nullptr;
      }
    }
  });
}

pcc_status pcc_uc_complexity(const pcc_boolfun* f, int b, const char* mode, int force, int* uc,
                             char** family_json) {
  if (require(f && uc, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::UcMode m = mode ? pcc::uc_mode_from_string(mode) : pcc::UcMode::Partition;
    const pcc::UcResult r = pcc::uc_complexity(f->f, b, m, force != 0);
    *uc = r.uc;
    if (family_json) {
      pcc::ordered_json arr = pcc::ordered_json::array();
      for (const auto& [x, rho] : r.family.certs) {
        pcc::ordered_json e;
        std::string xs(f->f.n, '0'), rs(f->f.n, '0');
        for (unsigned j = 0; j < f->f.n; ++j) {
          xs[j] = pcc::BoolFunction::bit(x, f->f.n, j) ? '1' : '0';
          rs[j] = pcc::cell_char(rho[j]);
        }
        e["input"] = xs;
        e["certificate"] = rs;
        arr.push_back(std::move(e));
      }
      set_out(family_json, arr.dump());
    }
  });
}

pcc_status pcc_cover_number(const pcc_comm* m, int b, const char* mode, int force, int* count,
                            char** rectangles_json) {
  if (require(m && mode && count, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::CoverResult r =
        pcc::cover_number(m->m, b, pcc::cover_mode_from_string(mode), force != 0);
    *count = r.count;
    set_out(rectangles_json, pcc::rectangles_json(r.rects).dump());
  });
}

pcc_status pcc_lift(const pcc_boolfun* f, const pcc_comm* gadget, int force, pcc_comm** out) {
  if (require(f && gadget && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_comm{pcc::lift(f->f, gadget->m, force != 0)}; });
}

pcc_status pcc_certificates_to_partition(const pcc_boolfun* f, int b, const pcc_comm* gadget,
                                         int force, char** rectangles_json) {
  if (require(f && gadget && rectangles_json, "null argument") != PCC_OK)
    return PCC_ERR_INVALID;
  return guarded([&] {
    const pcc::UcResult uc = pcc::uc_complexity(f->f, b, pcc::UcMode::Partition, force != 0);
    std::array<std::vector<pcc::Rectangle>, 2> parts;
    for (int v = 0; v < 2; ++v) {
      bool has = false;
      for (const auto& row : gadget->m.cells)
        for (std::uint8_t cell : row) has = has || cell == v;
      if (has)
        parts[v] =
            pcc::cover_number(gadget->m, v, pcc::CoverMode::Partition, force != 0).rects;
    }
    const auto rects =
        pcc::certificates_to_partition(f->f, gadget->m, uc.family, parts, force != 0);
    set_out(rectangles_json, pcc::rectangles_json(rects).dump());
  });
}

pcc_status pcc_ass_conflict_graph(const pcc_comm* m, int force, pcc_graph** out) {
  if (require(m && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = new pcc_graph{pcc::ass_conflict_graph(m->m, force != 0)}; });
}

pcc_status pcc_ass_pipeline(const pcc_comm* m, int force, char** report_json, pcc_graph** graph,
                            pcc_bicliques** partition) {
  if (require(m != nullptr, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    pcc::AssPipelineResult r = pcc::ass_pipeline(m->m, force != 0);
    if (report_json) set_out(report_json, pcc::ass_report_json(r.report).dump());
    if (partition) *partition = new pcc_bicliques{r.graph.n, r.partition};
    if (graph) *graph = new pcc_graph{std::move(r.graph)};
  });
}

/* ---------------- conversion and verification ---------------- */

pcc_status pcc_convert(const char* input_text, const char* target, char** out) {
  if (require(input_text && target && out, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] { *out = dup_string(pcc::convert(input_text, target)); });
}

pcc_status pcc_verify_run(const char* check_id, const char* params_json, uint64_t seed,
                          const char* artifact_dir, char** report_json, int* pass) {
  if (require(check_id && pass, "null argument") != PCC_OK) return PCC_ERR_INVALID;
  return guarded([&] {
    pcc::ordered_json params = pcc::ordered_json::object();
    if (params_json && params_json[0] != '\0') {
      try {
        params = pcc::ordered_json::parse(params_json);
      } catch (const nlohmann::json::exception& e) {
        throw pcc::InvalidArgument(std::string("bad params json: ") + e.what());
      }
    }
    const pcc::VerifyReport report =
        pcc::run_check(check_id, params, seed, artifact_dir ? artifact_dir : ".");
    *pass = report.pass ? 1 : 0;
    if (report_json) set_out(report_json, report.to_json().dump(2) + "\n");
  });
}

} /* extern "C" */
