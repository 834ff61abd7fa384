#ifndef CHROMSPEC_CHROMSPEC_H
#define CHROMSPEC_CHROMSPEC_H

/* C interface of the chromspec shared library.
 *
 * Graphs are opaque handles owned by the caller (cs_graph_free). Strings
 * returned through char** are heap allocated and released with
 * cs_string_free. On failure a call returns a nonzero cs_status and
 * cs_last_error() describes the problem; the message is per thread and valid
 * until the next failing call on that thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define CS_API __declspec(dllexport)
#else
#  define CS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cs_graph cs_graph;

typedef enum cs_status {
  CS_OK = 0,
  CS_ERR_INVALID_ARGUMENT = 1,
  CS_ERR_PARSE = 2,
  CS_ERR_NOT_CONNECTED = 3,
  CS_ERR_CAP_EXCEEDED = 4,
  CS_ERR_NO_CONVERGENCE = 5,
  CS_ERR_IO = 6,
  CS_ERR_VERIFICATION = 7,
  CS_ERR_INTERNAL = 100
} cs_status;

typedef enum cs_format {
  CS_FORMAT_JSON = 0,
  CS_FORMAT_TEXT = 1,
  CS_FORMAT_DOT = 2,
  CS_FORMAT_EDGELIST = 3
} cs_format;

CS_API const char* cs_version(void);
CS_API const char* cs_last_error(void);
CS_API void cs_string_free(char* s);

/* pairs holds m (u, v) pairs, 2m entries. */
CS_API cs_status cs_graph_from_edges(size_t n, const uint32_t* pairs, size_t m, cs_graph** out);
/* K_n, K_{a,b}, T(N,k), petal(m), gpetal(m,n), Gktd(k,t,d), split(t,chi),
 * C_n, P_n, E_n, and "mx<spec>" for m disjoint copies. */
CS_API cs_status cs_graph_from_family(const char* spec, cs_graph** out);
CS_API cs_status cs_graph_parse_edge_list(const char* text, cs_graph** out);
CS_API cs_status cs_graph_read_edge_list(const char* path, cs_graph** out);
CS_API void cs_graph_free(cs_graph* g);

CS_API size_t cs_graph_order(const cs_graph* g);
CS_API size_t cs_graph_size(const cs_graph* g);
CS_API int cs_graph_is_connected(const cs_graph* g);
/* Writes up to 2*cap entries; returns the number of edges. */
CS_API size_t cs_graph_edges(const cs_graph* g, uint32_t* pairs, size_t cap);

/* json | dot | edgelist (text is the edge list). */
CS_API cs_status cs_graph_export(const cs_graph* g, cs_format fmt, char** out);

CS_API cs_status cs_spectrum_json(const cs_graph* g, double tol, char** out);
CS_API cs_status cs_largest_eigenvalue(const cs_graph* g, double tol, double* value,
                                       size_t* multiplicity);
CS_API cs_status cs_chromatic_number(const cs_graph* g, size_t* out);

/* Bound report of a connected graph as json or text. */
CS_API cs_status cs_report(const cs_graph* g, double tol, cs_format fmt, char** out);

/* Glue vertex becomes vertex 0 of the result. */
CS_API cs_status cs_one_sum(const cs_graph* g1, uint32_t x1, const cs_graph* g2, uint32_t x2,
                            cs_graph** out);
CS_API cs_status cs_join(const cs_graph* g1, const cs_graph* g2, cs_graph** out);
/* Both graphs on the shared index space 0..max(n1,n2)-1. */
CS_API cs_status cs_edge_disjoint_union(const cs_graph* g1, const cs_graph* g2, cs_graph** out);

/* suite: families | sharp | onesum | bounds | all. *passed is 1 when every
 * check passed. Output as json or text. */
CS_API cs_status cs_verify(const char* suite, uint64_t seed, size_t max_n, double tol,
                           cs_format fmt, char** out, int* passed);

/* predicate: sharp | sharp-mult=K | sharp-mult=N-J; max_n <= 9. Output as
 * json, text or edgelist. */
CS_API cs_status cs_search(size_t max_n, const char* predicate, double tol, cs_format fmt,
                           char** out);

#ifdef __cplusplus
}
#endif

#endif
