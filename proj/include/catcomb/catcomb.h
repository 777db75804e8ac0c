/* C interface to the exact-combinatorics library: lattice-path and tree
 * enumeration, path statistics, verified bijections, and counting
 * identities with three-way verification.
 *
 * Conventions:
 *  - Every char** output receives a malloc'd NUL-terminated string owned by
 *    the caller; release it with cc_string_free. On failure the output is
 *    set to NULL and *err (when the parameter is present and non-NULL)
 *    receives a malloc'd message.
 *  - Paths are words over U (up) and D (down); Schroder paths additionally
 *    use F (a flat spanning two x-units). Marked paths serialize as
 *    "WORD v1,v2,..." with vertex indices; grid-path pairs as "B T" with
 *    "." standing for an empty word.
 */

#ifndef CATCOMB_CATCOMB_H
#define CATCOMB_CATCOMB_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cc_status {
  CC_OK = 0,
  CC_EOF = 1,              /* stream exhausted (not an error) */
  CC_ERR_USAGE = 2,        /* bad arguments to an API call */
  CC_ERR_PARSE = 3,        /* malformed textual input */
  CC_ERR_DOMAIN = 4,       /* input outside an operation's domain */
  CC_ERR_UNKNOWN_NAME = 5, /* unregistered family/statistic/map/identity */
  CC_ERR_BOUNDS = 6,       /* size beyond the documented bound */
  CC_ERR_MISMATCH = 7,     /* a verification found a counterexample */
  CC_ERR_INTERNAL = 8      /* library invariant violation (a bug) */
} cc_status;

void cc_string_free(char* s);
const char* cc_status_name(cc_status status);

/* ------------------------------------------------------------------ *
 * Registries (newline-separated "name\tdescription" lines).          *
 * ------------------------------------------------------------------ */
cc_status cc_list_families(char** out);
cc_status cc_list_statistics(char** out);
cc_status cc_list_bijections(char** out);
cc_status cc_list_identities(char** out);

/* ------------------------------------------------------------------ *
 * Statistics.                                                        *
 * ------------------------------------------------------------------ */
cc_status cc_path_stat(const char* word, const char* stat_name, long long* out,
                       char** err);
/* All registered statistics of one word, as "name=value" lines. */
cc_status cc_path_stats_all(const char* word, char** out, char** err);
/* nodes-adjacent-to-a-leaf count of a parenthesized ordered tree. */
cc_status cc_tree_stat(const char* parens, long long* out, char** err);

/* ------------------------------------------------------------------ *
 * Enumeration. Families: dyck(n), balanced(n), inverted-dyck(n),     *
 * schroder(n), trees(n), marked-ia(n,k), marked-df(n,k),             *
 * marked-df-parity(n,k), levine(r,s), gv-long-interior(n,k),         *
 * gv-x1-plus-x2(n,k), finelike(n,j,k).                               *
 * ------------------------------------------------------------------ */
typedef struct cc_stream cc_stream;
cc_status cc_stream_open(const char* family, const long long* params,
                         size_t n_params, cc_stream** out, char** err);
/* CC_OK with a line, or CC_EOF when exhausted. */
cc_status cc_stream_next(cc_stream* s, char** line);
cc_status cc_stream_reset(cc_stream* s);
void cc_stream_free(cc_stream* s);
cc_status cc_count(const char* family, const long long* params,
                   size_t n_params, unsigned long long* out, char** err);

/* ------------------------------------------------------------------ *
 * Bijections. input is one object line in the family serialization.  *
 * options: comma-separated, from                                     *
 *   inverse            apply the registered inverse direction        *
 *   trace              append rewriting steps after the image line   *
 *   index=<i>          rotation class index (cycle-rotate)           *
 *   variant=<name>     gv-long-interior | gv-x1-plus-x2              *
 *   class=<A|B>        class tag for the inverse pair adjustment     *
 *   marks=<v1;v2;...>  mark vertices when not part of the input line *
 * Pass NULL or "" for no options.                                    *
 * ------------------------------------------------------------------ */
cc_status cc_biject(const char* name, const char* input, const char* options,
                    char** out, char** err);
/* Exhaustive verification at the given size. *pass gets 1/0; the report is
 * returned even when a counterexample is found (status CC_ERR_MISMATCH). */
cc_status cc_verify_bijection(const char* name, long long size, char** report,
                              int* pass, char** err);

/* ------------------------------------------------------------------ *
 * Identities. Formats: text, csv, json, bfile.                       *
 * ------------------------------------------------------------------ */
cc_status cc_formula(const char* identity, long long n, long long k,
                     unsigned long long* out, char** err);
/* The (j,k)-refined Fine count. */
cc_status cc_formula_refined(long long n, long long j, long long k,
                             unsigned long long* out, char** err);
cc_status cc_distribution(const char* family, const long long* params,
                          size_t n_params, const char* stat_name,
                          const char* format, char** out, char** err);
cc_status cc_verify_identity(const char* identity, long long n_max,
                             const char* format, char** out, int* pass,
                             char** err);
/* Every registered identity, each clamped to its per-kind cap. */
cc_status cc_verify_all(long long n_max, const char* format, char** out,
                        int* pass, char** err);
cc_status cc_table(const char* identity, long long n_max, const char* format,
                   char** out, char** err);

/* ------------------------------------------------------------------ *
 * Rendering. kind: path | schroder | tree. style: ascii | svg.       *
 * marks: "v1;v2;..." or NULL/"" (paths only).                        *
 * ------------------------------------------------------------------ */
cc_status cc_render(const char* kind, const char* input, const char* marks,
                    const char* style, char** out, char** err);

#ifdef __cplusplus
}
#endif

#endif /* CATCOMB_CATCOMB_H */
