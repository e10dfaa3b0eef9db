// Copyright 2026 The walkdist Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to walkdist. All objects are opaque handles owned by the
 * caller and released with the matching *_destroy function. Every fallible
 * call returns a wd_status; on failure wd_last_error() describes the problem
 * for the calling thread until its next failing call. Strings returned
 * through char** out parameters are heap allocated and must be released with
 * wd_string_free.
 */

#ifndef WALKDIST_WALKDIST_H_
#define WALKDIST_WALKDIST_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WALKDIST_BUILDING_SHARED)
#    define WD_API __declspec(dllexport)
#  else
#    define WD_API __declspec(dllimport)
#  endif
#else
#  define WD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct wd_graph wd_graph;
typedef struct wd_guvab wd_guvab;

typedef enum wd_status {
  WD_OK = 0,
  WD_ERR_INVALID_ARGUMENT = 1,
  WD_ERR_SELF_LOOP = 2,
  WD_ERR_DUPLICATE_EDGE = 3,
  WD_ERR_DISCONNECTED = 4,
  WD_ERR_EMPTY_VERTEX_SET = 5,
  WD_ERR_LIMIT_EXCEEDED = 6,
  WD_ERR_LAZINESS_OUT_OF_RANGE = 7,
  WD_ERR_NOT_BIPARTITE = 8,
  WD_ERR_UNBALANCED_MASS = 9,
  WD_ERR_NOT_LIPSCHITZ = 10,
  WD_ERR_TOO_LARGE = 11,
  WD_ERR_NO_LATER_NEIGHBOR = 12,
  WD_ERR_BETA_ONE = 13,
  WD_ERR_WRONG_CATEGORY = 14,
  WD_ERR_EVENTUALLY_CONSTANT = 15,
  WD_ERR_TOO_FEW_POINTS = 16,
  WD_ERR_PARSE = 17,
  WD_ERR_IO = 18,
  WD_ERR_INTERNAL = 99
} wd_status;

typedef enum wd_format { WD_FORMAT_CSV = 0, WD_FORMAT_JSON = 1 } wd_format;

typedef struct wd_tolerances {
  double mass;
  double gap;
  double strict;
} wd_tolerances;

typedef struct wd_config {
  char graph_path[4096];
  char u[256];
  char v[256];
  double alpha;
  double beta;
  int k_max;
  wd_tolerances tol;
} wd_config;

WD_API const char* wd_last_error(void);
WD_API const char* wd_status_name(wd_status status);
WD_API void wd_string_free(char* s);
WD_API wd_tolerances wd_default_tolerances(void);

/* Graphs. edge_pairs holds 2 * edge_count vertex indices. */
WD_API wd_status wd_graph_create(int n, const int* edge_pairs,
                                 size_t edge_count, wd_graph** out);
WD_API wd_status wd_graph_parse(const char* text, wd_graph** out);
WD_API wd_status wd_graph_load(const char* path, wd_graph** out);
WD_API void wd_graph_destroy(wd_graph* g);
WD_API int wd_graph_vertex_count(const wd_graph* g);
WD_API int wd_graph_edge_count(const wd_graph* g);
/* Index for a vertex label or decimal index; -1 when unknown. */
WD_API int wd_graph_find_vertex(const wd_graph* g, const char* name);

/* Guvab: walks of laziness alpha from u and beta from v, alpha <= beta. */
WD_API wd_status wd_guvab_create(const wd_graph* g, int u, int v, double alpha,
                                 double beta, wd_guvab** out);
WD_API void wd_guvab_destroy(wd_guvab* g);

/* Reads a JSON run configuration; relative graph paths resolve against the
 * configuration file's directory. */
WD_API wd_status wd_config_load(const char* path, wd_config* out);

/* W(xi, 0) for a zero-sum xi of length n. potential may be NULL; otherwise
 * it receives the n values of an optimal 1-Lipschitz dual certificate. */
WD_API wd_status wd_wasserstein(const wd_graph* g, const double* xi, size_t n,
                                double tol_mass, double* value,
                                double* potential);

/* One-shot distance between two "vertex,mass" CSV distributions. The CSV
 * output is the plan ("source,target,mass"), a blank line, then the
 * potential ("vertex,ell"); JSON holds value, plan and potential. */
WD_API wd_status wd_distance(const wd_graph* g, const char* mu_csv,
                             const char* nu_csv, const wd_tolerances* tol,
                             wd_format format, char** out);

/* W_k for k = 0..k_max into out[0..k_max]. */
WD_API wd_status wd_wk_series(const wd_guvab* g, int k_max,
                              const wd_tolerances* tol, double* out);

WD_API wd_status wd_classify(const wd_guvab* g, const wd_tolerances* tol,
                             char** out_json);

/* W_k series with deviations from the parity limits and fitted rates. */
WD_API wd_status wd_trace(const wd_guvab* g, int k_max,
                          const wd_tolerances* tol, wd_format format,
                          char** out);

/* Tree-based transport of xi_k: trace, inequality report and costs. */
WD_API wd_status wd_tree_transport(const wd_guvab* g, int k,
                                   const wd_tolerances* tol, char** out_json);

/* Exhaustive consistency sweep over connected graphs with up to n_max
 * vertices. Grid pairs with alpha > beta are skipped and counted. */
WD_API wd_status wd_sweep(int n_max, const double* grid, size_t grid_len,
                          int k_max, const wd_tolerances* tol, char** out_csv,
                          int* discrepancies, int* skipped_pairs);

#ifdef __cplusplus
}
#endif

#endif  /* WALKDIST_WALKDIST_H_ */
