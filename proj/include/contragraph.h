/*
 * contragraph - contradiction graphs of finite binary concept classes.
 *
 * C API over the core library: opaque handles, integer status codes, and
 * JSON text for structured payloads. Every function that can fail returns a
 * cg_status; on failure cg_last_error() holds a message for the calling
 * thread until the next failing call. Strings returned through char** are
 * heap-allocated and must be released with cg_string_free().
 */
#ifndef CONTRAGRAPH_H
#define CONTRAGRAPH_H

#include <stdint.h>

#if defined(_WIN32)
#define CG_API __declspec(dllexport)
#else
#define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_ERROR_ARGUMENT = 1, /* invalid value or violated precondition */
  CG_ERROR_PARSE = 2,    /* malformed input text */
  CG_ERROR_LIMIT = 3,    /* size cap or search budget exceeded */
  CG_ERROR_IO = 4,
  CG_ERROR_INTERNAL = 5
} cg_status;

typedef enum cg_verdict {
  CG_VERDICT_FOUND = 0,
  CG_VERDICT_NOT_FOUND = 1,
  CG_VERDICT_RESOURCE_LIMIT = 2
} cg_verdict;

typedef struct cg_class cg_class;
typedef struct cg_graph cg_graph;

CG_API const char* cg_version(void);
CG_API const char* cg_last_error(void);
CG_API void cg_string_free(char* text);

/* ---- concept classes ---------------------------------------------------- */

CG_API cg_status cg_class_make_full(int n, cg_class** out);
CG_API cg_status cg_class_make_parity(int n, cg_class** out);
CG_API cg_status cg_class_make_prefix_tree(int depth, cg_class** out);
CG_API cg_status cg_class_make_random(int n, int64_t count, uint64_t seed, cg_class** out);
CG_API cg_status cg_class_from_json(const char* text, cg_class** out);
CG_API cg_status cg_class_to_json(const cg_class* cls, char** out_text);
CG_API void cg_class_free(cg_class* cls);

CG_API int cg_class_domain_size(const cg_class* cls);
CG_API int64_t cg_class_concept_count(const cg_class* cls);

CG_API cg_status cg_class_vc_dimension(const cg_class* cls, int* out_vc);

/* method: "oracle", "forward" or "abstract". Budget values of 0 select the
 * defaults (10^6 cliques, 10^7 bijection nodes; abstract is limited to
 * m <= 3). cap_vertices = 0 selects the default vertex cap (200000). */
CG_API cg_status cg_vc_at_least(const cg_class* cls, int m, const char* method,
                                uint64_t budget_cliques, uint64_t budget_bijections,
                                uint64_t cap_vertices, int* out_holds);

/* ---- contradiction graphs ----------------------------------------------- */

CG_API cg_status cg_graph_build(const cg_class* cls, int m, uint64_t cap_vertices,
                                cg_graph** out);
/* format: "json", "graph6" or "dimacs". graph6/dimacs inputs carry adjacency
 * only; label-dependent operations reject such graphs. */
CG_API cg_status cg_graph_from_text(const char* text, const char* format, cg_graph** out);
CG_API cg_status cg_graph_to_text(const cg_graph* g, const char* format, char** out_text);
CG_API void cg_graph_free(cg_graph* g);

CG_API int64_t cg_graph_vertex_count(const cg_graph* g);
CG_API int64_t cg_graph_edge_count(const cg_graph* g);
/* Order m of the graph; 0 for adjacency-only imports. */
CG_API int cg_graph_order(const cg_graph* g);
CG_API cg_status cg_graph_equal(const cg_graph* a, const cg_graph* b, int* out_equal);

/* Adjacency-only copy with ids shuffled by a seeded permutation. */
CG_API cg_status cg_graph_relabel(const cg_graph* g, uint64_t seed, cg_graph** out);

/* ---- cube-trace detection ----------------------------------------------- */

/* Adjacency-only search for a cube-trace clique of size 2^m. Writes the
 * report JSON (verdict, optional certificate, counters) and the verdict.
 * Completes with CG_OK for found and not-found alike; only malformed
 * arguments fail. */
CG_API cg_status cg_detect_graph(const cg_graph* g, int m, uint64_t budget_cliques,
                                 uint64_t budget_bijections, char** out_report_json,
                                 cg_verdict* out_verdict);

/* Same report shape for a class input; method selects the route ("oracle",
 * "forward" or "abstract"; only "abstract" may yield a resource limit). */
CG_API cg_status cg_detect_class(const cg_class* cls, int m, const char* method,
                                 uint64_t budget_cliques, uint64_t budget_bijections,
                                 uint64_t cap_vertices, char** out_report_json,
                                 cg_verdict* out_verdict);

/* ---- verification suite -------------------------------------------------- */

/* scope: "all" or one check name. Writes the run report JSON and whether
 * every executed check passed. Check failures leave the status CG_OK; the
 * caller decides the exit code. */
CG_API cg_status cg_verify_run(const char* scope, uint64_t seed, char** out_report_json,
                               int* out_all_passed);

#ifdef __cplusplus
}
#endif

#endif /* CONTRAGRAPH_H */
