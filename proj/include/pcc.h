/* pcc — exact toolkit for partial concept classes, their disambiguations,
 * and the graph/communication constructions built from them.
 *
 * C API of the shared library. All functions return a pcc_status; outputs
 * come back through out-parameters. Strings returned through char** are owned
 * by the caller and must be released with pcc_string_free; handles with the
 * matching *_free. On any non-OK status, pcc_last_error() describes the
 * failure (thread-local).
 *
 * Indices crossing this API are 0-based. Serialized text (file formats, JSON
 * reports, DOT) is 1-based.
 */
#ifndef PCC_H
#define PCC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PCC_API __declspec(dllexport)
#else
#define PCC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcc_status {
  PCC_OK = 0,
  PCC_ERR_PARSE = 1,   /* malformed input text; message carries the line */
  PCC_ERR_INVALID = 2, /* bad argument / violated precondition */
  PCC_ERR_GUARD = 3,   /* size guard or work budget hit */
  PCC_ERR_CHECK = 4,   /* internal consistency assertion failed */
  PCC_ERR_FAIL = 5     /* operation ran but the checked property is violated */
} pcc_status;

typedef struct pcc_matrix pcc_matrix;     /* concept class over {0,1,*} */
typedef struct pcc_graph pcc_graph;       /* simple undirected graph */
typedef struct pcc_bicliques pcc_bicliques; /* oriented biclique family */
typedef struct pcc_comm pcc_comm;         /* Boolean communication matrix */
typedef struct pcc_boolfun pcc_boolfun;   /* Boolean function truth table */

PCC_API const char* pcc_last_error(void);
PCC_API void pcc_string_free(char* s);

/* Cap on search nodes for the exact solvers; 0 means unlimited. */
PCC_API void pcc_set_work_budget(uint64_t max_nodes);

/* ------------------------------------------------------------------ */
/* concept classes                                                     */
/* ------------------------------------------------------------------ */

PCC_API pcc_status pcc_matrix_parse(const char* text, pcc_matrix** out);
PCC_API pcc_status pcc_matrix_format(const pcc_matrix* m, char** out);
PCC_API void pcc_matrix_free(pcc_matrix* m);
PCC_API size_t pcc_matrix_n_points(const pcc_matrix* m);
PCC_API size_t pcc_matrix_n_concepts(const pcc_matrix* m);
/* 0, 1, or 2 for star; -1 when out of range */
PCC_API int pcc_matrix_cell(const pcc_matrix* m, size_t row, size_t point);
PCC_API int pcc_matrix_is_total(const pcc_matrix* m);

PCC_API pcc_status pcc_matrix_restrict(const pcc_matrix* m, const size_t* points, size_t n_points,
                                       pcc_matrix** out);
PCC_API pcc_status pcc_matrix_dual(const pcc_matrix* m, pcc_matrix** out);
/* pattern is a star-free matrix; witness_json may be NULL */
PCC_API pcc_status pcc_matrix_contains_pattern(const pcc_matrix* m, const pcc_matrix* pattern,
                                               int* found, char** witness_json);
/* violation_json may be NULL; {"row":r,"point":p} (1-based) on failure */
PCC_API pcc_status pcc_matrix_is_disambiguation(const pcc_matrix* partial,
                                                const pcc_matrix* total, int* ok,
                                                char** violation_json);
PCC_API pcc_status pcc_matrix_distinct_rows(const pcc_matrix* total, size_t* out);
PCC_API pcc_status pcc_matrix_distinct_cols(const pcc_matrix* total, size_t* out);

/* ------------------------------------------------------------------ */
/* dimensions                                                          */
/* ------------------------------------------------------------------ */

PCC_API pcc_status pcc_vc_dim(const pcc_matrix* m, int* dim, char** witness_json);
PCC_API pcc_status pcc_ld_dim(const pcc_matrix* m, int* dim);
PCC_API pcc_status pcc_ld_tree_oracle(const pcc_matrix* m, int depth, int force, int* shattered,
                                      char** witness_json);
PCC_API pcc_status pcc_dual_vc_check(const pcc_matrix* m, int* vc, int* dual_vc,
                                     int* bound_holds);

/* ------------------------------------------------------------------ */
/* disambiguation                                                      */
/* ------------------------------------------------------------------ */

/* order may be NULL for the natural order; otherwise a permutation of the
 * points. trace_json and output may each be NULL. */
PCC_API pcc_status pcc_soa_disambiguate(const pcc_matrix* m, const size_t* order,
                                        size_t order_len, char** trace_json, pcc_matrix** output);
PCC_API pcc_status pcc_min_vc_disambiguation(const pcc_matrix* m, int force, int* vc_min,
                                             pcc_matrix** witness);
PCC_API pcc_status pcc_growth_profile(const pcc_matrix* m, const size_t* sizes, size_t n_sizes,
                                      uint64_t seed, char** json);

/* ------------------------------------------------------------------ */
/* constructions                                                       */
/* ------------------------------------------------------------------ */

PCC_API pcc_status pcc_gen_hrd(unsigned r, unsigned d, pcc_matrix** out);
PCC_API pcc_status pcc_gen_biclique_class(const pcc_graph* g, const pcc_bicliques* partition,
                                          pcc_matrix** out);
PCC_API pcc_status pcc_verify_ld_le_2(const pcc_matrix* m, int* ok);

/* ------------------------------------------------------------------ */
/* graphs                                                              */
/* ------------------------------------------------------------------ */

PCC_API pcc_status pcc_graph_parse(const char* text, pcc_graph** out);
PCC_API pcc_status pcc_graph_format(const pcc_graph* g, char** out);
PCC_API pcc_status pcc_graph_to_dot(const pcc_graph* g, char** out);
PCC_API void pcc_graph_free(pcc_graph* g);
PCC_API size_t pcc_graph_n_vertices(const pcc_graph* g);
PCC_API size_t pcc_graph_n_edges(const pcc_graph* g);
PCC_API pcc_status pcc_graph_complete(size_t n, pcc_graph** out);

PCC_API pcc_status pcc_chromatic_number(const pcc_graph* g, int force, int* chi,
                                        char** coloring_json);
PCC_API pcc_status pcc_biclique_partition_number(const pcc_graph* g, int force, int* bp,
                                                 pcc_bicliques** partition);
PCC_API pcc_status pcc_bp_spectral_lower_bound(const pcc_graph* g, int* bound);

PCC_API pcc_status pcc_bicliques_parse(const char* text, pcc_bicliques** out);
PCC_API pcc_status pcc_bicliques_format(const pcc_bicliques* b, char** out);
PCC_API void pcc_bicliques_free(pcc_bicliques* b);
PCC_API size_t pcc_bicliques_count(const pcc_bicliques* b);
/* star biclique partition of the complete graph K_n */
PCC_API pcc_status pcc_bicliques_star(size_t n, pcc_bicliques** out);

/* mode: "partition", "cover", or "cover-le-2"; violation_json may be NULL */
PCC_API pcc_status pcc_validate_biclique_family(const pcc_graph* g, const pcc_bicliques* family,
                                                const char* mode, int* ok,
                                                char** violation_json);

/* ------------------------------------------------------------------ */
/* communication matrices and Boolean functions                        */
/* ------------------------------------------------------------------ */

PCC_API pcc_status pcc_comm_parse(const char* text, pcc_comm** out);
PCC_API pcc_status pcc_comm_format(const pcc_comm* m, char** out);
PCC_API void pcc_comm_free(pcc_comm* m);
PCC_API size_t pcc_comm_rows(const pcc_comm* m);
PCC_API size_t pcc_comm_cols(const pcc_comm* m);
PCC_API int pcc_comm_cell(const pcc_comm* m, size_t r, size_t c);

PCC_API pcc_status pcc_bf_parse(const char* text, pcc_boolfun** out);
PCC_API pcc_status pcc_bf_format(const pcc_boolfun* f, char** out);
PCC_API void pcc_bf_free(pcc_boolfun* f);

/* worst_input receives the maximizing input as a bit string, or NULL when
 * f^-1(b) is empty; may be NULL */
PCC_API pcc_status pcc_cert_complexity(const pcc_boolfun* f, int b, int force, int* cer,
                                       char** worst_input);
/* mode: "partition" (default unambiguity semantics) or "distinct" */
PCC_API pcc_status pcc_uc_complexity(const pcc_boolfun* f, int b, const char* mode, int force,
                                     int* uc, char** family_json);
/* mode: "cover" or "partition" */
PCC_API pcc_status pcc_cover_number(const pcc_comm* m, int b, const char* mode, int force,
                                    int* count, char** rectangles_json);
PCC_API pcc_status pcc_lift(const pcc_boolfun* f, const pcc_comm* gadget, int force,
                            pcc_comm** out);
/* Builds the certificate family (partition mode) and per-value gadget
 * partitions internally, then crosses them into an exact b-partition of the
 * lifted matrix. */
PCC_API pcc_status pcc_certificates_to_partition(const pcc_boolfun* f, int b,
                                                 const pcc_comm* gadget, int force,
                                                 char** rectangles_json);

PCC_API pcc_status pcc_ass_conflict_graph(const pcc_comm* m, int force, pcc_graph** out);
/* report_json, graph and partition may each be NULL */
PCC_API pcc_status pcc_ass_pipeline(const pcc_comm* m, int force, char** report_json,
                                    pcc_graph** graph, pcc_bicliques** partition);

/* ------------------------------------------------------------------ */
/* conversion and verification                                         */
/* ------------------------------------------------------------------ */

/* target: pcc, comm, graph, bf, bcp, dot, json */
PCC_API pcc_status pcc_convert(const char* input_text, const char* target, char** out);

/* params_json and artifact_dir may be NULL. Returns PCC_OK with *pass = 0
 * when the check ran and failed. */
PCC_API pcc_status pcc_verify_run(const char* check_id, const char* params_json, uint64_t seed,
                                  const char* artifact_dir, char** report_json, int* pass);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* PCC_H */
