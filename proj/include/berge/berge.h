// Copyright 2026 The berge-turan Authors
//
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

#ifndef BERGE_BERGE_H
#define BERGE_BERGE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(BERGE_BUILDING_LIBRARY)
#    define BERGE_API __declspec(dllexport)
#  else
#    define BERGE_API __declspec(dllimport)
#  endif
#else
#  define BERGE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/*
 * Status codes. Non-negative values are outcomes, negative values errors.
 * After an error, berge_last_error() describes it on the calling thread.
 */
typedef enum berge_status {
    BERGE_OK = 0,
    /* The searched pattern does not occur. */
    BERGE_ABSENT = 1,
    /* A property failed: counterexample, greedy violation, failed certificate. */
    BERGE_VIOLATED = 2,
    BERGE_ERR_INVALID_ARGUMENT = -1,
    BERGE_ERR_PARSE = -2,
    BERGE_ERR_IO = -3,
    BERGE_ERR_GUARD = -4,
    BERGE_ERR_PRECONDITION = -5,
    BERGE_ERR_INTERNAL = -6
} berge_status;

typedef struct berge_hypergraph berge_hypergraph;

typedef struct berge_config {
    int workers;
    uint64_t seed;
    /* Largest pattern (positive-degree vertices) accepted by containment. */
    int pattern_guard;
    /* Largest n for exact hypergraph search. */
    int search_guard;
    /* Largest n for exact graph search. */
    int graph_guard;
} berge_config;

/* workers 1, seed 1, guards 8 / 7 / 9. */
BERGE_API void berge_config_init(berge_config* config);

BERGE_API const char* berge_version(void);
BERGE_API const char* berge_last_error(void);
BERGE_API const char* berge_status_name(berge_status status);

/* Frees every char* handed out by this library. */
BERGE_API void berge_string_free(char* s);

BERGE_API berge_status berge_hypergraph_new(int n, berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_add(berge_hypergraph* h, const int32_t* vertices, size_t count);
/* Text or JSON; see the README for both formats. */
BERGE_API berge_status berge_hypergraph_parse(const char* text, berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_read(const char* path, berge_hypergraph** out);
/* Canonical text (json == 0) or JSON over dense ids; a non-identity label map is recorded alongside. */
BERGE_API berge_status berge_hypergraph_write(const berge_hypergraph* h, int json, char** out);
BERGE_API void berge_hypergraph_free(berge_hypergraph* h);
BERGE_API int berge_hypergraph_order(const berge_hypergraph* h);
BERGE_API size_t berge_hypergraph_size(const berge_hypergraph* h);

/* BERGE_OK when valid, BERGE_VIOLATED otherwise; the JSON lists violations. */
BERGE_API berge_status berge_hypergraph_validate(const berge_hypergraph* h, char** json_out);
BERGE_API berge_status berge_count_report(const berge_hypergraph* h, char** json_out);

/* BERGE_OK with a witness, or BERGE_ABSENT. Patterns: K3, K2,3, C4, P4, ... */
BERGE_API berge_status berge_check(const berge_hypergraph* h, const char* pattern, const berge_config* config,
                                   char** json_out);

BERGE_API berge_status berge_girth(const berge_hypergraph* h, int g_max, const berge_config* config, char** json_out);

/*
 * procedure: "unique", "matching", "c4" or "triangle". pattern is required
 * for "matching" and selects the witness pattern otherwise (may be NULL).
 * shuffle_seed may be NULL for input order. Returns BERGE_VIOLATED when the
 * greedy step got stuck; the JSON then carries the lifted witness.
 */
BERGE_API berge_status berge_embed(const berge_hypergraph* h, const char* procedure, const char* pattern,
                                   const uint64_t* shuffle_seed, const berge_config* config, char** shadow_out,
                                   char** json_out);

typedef struct berge_verify_params {
    int r;
    int s;
    int t;
    /* Complete graph order (rainbow) or column count (rainbow-bipartite); 0 picks the guaranteed size. */
    int vertices;
    uint64_t trials;
} berge_verify_params;

BERGE_API void berge_verify_params_init(berge_verify_params* params);

/* lemma: "ramsey-k5", "ramsey-k6", "ramsey-k7", "mono-triangle", "rainbow", "rainbow-bipartite". */
BERGE_API berge_status berge_verify(const char* lemma, const berge_verify_params* params, const berge_config* config,
                                    char** json_out);

typedef struct berge_construct_params {
    int n;
    int r;
    int s;
    int t;
    int p;
    int q;
    int trials;
} berge_construct_params;

BERGE_API void berge_construct_params_init(berge_construct_params* params);

/*
 * kind: "turan", "plane", "kr-blowup", "kst-blowup", "star-free", "girth5",
 * "triple-blowup". "kst-blowup" reads a graph (2-uniform) from input and
 * "triple-blowup" a 3-uniform hypergraph; others ignore it. body_out gets
 * the object in canonical text, json_out the certificate. Returns
 * BERGE_VIOLATED if a certificate check fails.
 */
BERGE_API berge_status berge_construct(const char* kind, const berge_construct_params* params,
                                       const berge_hypergraph* input, const berge_config* config, char** body_out,
                                       char** json_out);

typedef struct berge_search_params {
    int n;
    /* Pattern specs, e.g. {"C3", "C4"}. */
    const char* const* forbid;
    size_t forbid_count;
    const int* sizes;
    size_t size_count;
    int simple;
    /* "edges", "degree_sum" or "deficiency_sum". */
    const char* objective;
    /* Nonzero: ex(n, forbid) over simple graphs; sizes and objective are ignored. */
    int graph;
} berge_search_params;

BERGE_API berge_status berge_search(const berge_search_params* params, const berge_config* config, char** json_out);

BERGE_API berge_status berge_bounds(const char* name, const char* const* keys, const int64_t* values, size_t count,
                                    char** json_out);

/*
 * inequality: "edge_sum", "linear_observation" or "girth_proposition".
 * Returns BERGE_VIOLATED only when the hypotheses hold and the bound fails.
 */
BERGE_API berge_status berge_inequality(const char* inequality, const berge_hypergraph* h, const char* pattern,
                                        int girth, const berge_config* config, char** json_out);

/* suite: "paper". CSV with CRLF line ends. */
BERGE_API berge_status berge_table(const char* suite, const int* ns, size_t count, const berge_config* config,
                                   char** csv_out);

#ifdef __cplusplus
}
#endif

#endif
