/*
   Copyright 2026 the itp authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C API of the itp shared library: exact interlace polynomials of looped
 * simple graphs and parametrized Tutte (rank) polynomials of the binary
 * matroids represented by (I | A) and (I | A | A+I).
 *
 * All objects are opaque handles freed with the matching *_free function.
 * Functions return ITP_OK on success; on failure they return an error code
 * and leave a human-readable message in itp_last_error() (thread-local).
 * Strings returned through char** are heap-allocated; release them with
 * itp_string_free.
 */

#ifndef ITP_ITP_H
#define ITP_ITP_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum itp_status {
    ITP_OK = 0,
    ITP_ERR_PARSE = 1,    /* malformed graph / polynomial / parameter input */
    ITP_ERR_CAP = 2,      /* enumeration size cap exceeded */
    ITP_ERR_INVALID = 3,  /* invalid argument or flag combination */
    ITP_ERR_NOMEM = 4,
    ITP_ERR_INTERNAL = 5
} itp_status;

typedef struct itp_graph itp_graph;
typedef struct itp_poly itp_poly;

/* Message describing the most recent failure on this thread ("" if none).
 * The pointer stays valid until the next failing itp_* call on the thread. */
const char* itp_last_error(void);

void itp_string_free(char* s);
void itp_graph_free(itp_graph* g);
void itp_poly_free(itp_poly* p);

/* --- graphs ------------------------------------------------------------ */

/* Parses the graph text format:
 *   # comment
 *   vertices: a b c d
 *   loops: b d
 *   edges: a-b b-c c-d
 */
itp_status itp_graph_parse(const char* text, itp_graph** out);
itp_status itp_graph_read_file(const char* path, itp_graph** out);

size_t itp_graph_vertex_count(const itp_graph* g);
uint64_t itp_graph_fingerprint(const itp_graph* g);
itp_status itp_graph_to_text(const itp_graph* g, char** out);

/* --- polynomial computations ------------------------------------------- */

/* kind:   "q" | "tutte_ia" | "tutte_ias" | "section_ia" | "section_ias"
 *         | "param_rank"
 * method: "subset" | "recursive" | "section"
 *   q:                       subset, recursive, or section
 *   tutte_ia / tutte_ias:    subset or recursive
 *   section_ia / section_ias: section
 *   param_rank:              subset or recursive
 * params_text: required for param_rank (contents of a parameter file, one
 *   line per ground element: "<vertex> <phi|chi|psi> a=<poly> b=<poly>");
 *   must be NULL for every other kind. When any psi line is present the
 *   matroid is M(IAS(G)), otherwise M(IA(G)).
 * threads: worker count for subset enumerations; 0 picks automatically.
 *   Results are bit-identical for every thread count.
 */
itp_status itp_compute(const itp_graph* g, const char* kind, const char* method,
                       const char* params_text, unsigned threads, itp_poly** out);

itp_status itp_poly_to_text(const itp_poly* p, char** out);
itp_status itp_poly_to_json(const itp_poly* p, char** out);

/* Exact evaluation of a polynomial in x and y only; x_rat / y_rat are
 * decimal integers or fractions like "7/2". The value is returned in the
 * same form, reduced. */
itp_status itp_poly_eval_xy(const itp_poly* p, const char* x_rat, const char* y_rat,
                            char** value_out);

/* --- cross-checks -------------------------------------------------------- */

/* suite: "methods" | "section" | "ias" | "identities" | "all".
 * Renders one PASS/FAIL line per identity into *report_out and sets
 * *pass_out to 1 iff every line passed. */
itp_status itp_check(const itp_graph* g, const char* suite, char** report_out, int* pass_out);

/* Runs the full identity suite on every looped simple graph on exactly
 * max_vertices labeled vertices (max 5), plus random_extra random graphs on
 * 6..9 vertices; deterministic for a fixed seed. */
itp_status itp_selfcheck(unsigned max_vertices, uint64_t seed, uint64_t random_extra,
                         char** report_out, int* pass_out);

#ifdef __cplusplus
}
#endif

#endif
