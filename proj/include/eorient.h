/* C API for the Eulerian orientation toolkit. All structured results are
 * returned as heap-allocated JSON or CSV strings; release them with
 * eo_string_free. Graphs are opaque handles. Every function that can fail
 * returns an eo_status; eo_last_error() describes the most recent failure on
 * the calling thread. */

#ifndef EORIENT_H
#define EORIENT_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct eo_graph eo_graph;

typedef enum eo_status {
  EO_OK = 0,
  EO_ERR_PARSE = 1,
  EO_ERR_LOOP = 2,
  EO_ERR_INDEX = 3,
  EO_ERR_PARAM = 4,
  EO_ERR_CAP = 5,
  EO_ERR_NOT_EULERIAN = 6,
  EO_ERR_STATE_BLOWUP = 7,
  EO_ERR_PARITY = 8,
  EO_ERR_SHAPE = 9,
  EO_ERR_REGULARITY = 10,
  EO_ERR_CONVERGENCE = 11,
  EO_ERR_DOMAIN = 12,
  EO_ERR_SIZE = 13,
  EO_ERR_RADIUS = 14,
  EO_ERR_GAUGE = 15,
  EO_ERR_INTERNAL = 99
} eo_status;

/* Message for the last failure on this thread; empty string if none. */
const char* eo_last_error(void);
/* Machine-readable name of the last failure ("LoopError", ...). */
const char* eo_last_error_kind(void);

void eo_string_free(char* s);

/* ---- graphs ---------------------------------------------------------- */

/* Text ("n m" header + edge lines, '#' comments) or JSON, sniffed. */
eo_status eo_graph_parse(const char* text, eo_graph** out);
eo_status eo_graph_load(const char* path, eo_graph** out);
/* spec_json: {"family":"torus","params":[3,3]} with optional "seed" and,
 * for iterated_subdivision, a nested "base" spec. */
eo_status eo_graph_generate(const char* spec_json, eo_graph** out);
void eo_graph_free(eo_graph* g);

int32_t eo_graph_vertices(const eo_graph* g);
int32_t eo_graph_edges(const eo_graph* g);
int eo_graph_is_eulerian(const eo_graph* g);
/* -1 encodes an acyclic graph. */
int32_t eo_graph_girth(const eo_graph* g);
eo_status eo_graph_to_text(const eo_graph* g, char** out);
eo_status eo_graph_to_json(const eo_graph* g, char** out);

/* ---- operations ------------------------------------------------------ */

/* method: "brute", "dp" or "cycles". cap <= 0 picks the default. JSON:
 * {"value":"24","method":"cycle_space"}; wall time goes to *elapsed_ms. */
eo_status eo_count(const eo_graph* g, const char* method, int cap, int threads, char** json,
                   double* elapsed_ms);

/* {"degree":2m,"coeffs":{"0":"243/32",...}} with only nonzero entries. */
eo_status eo_poly(const eo_graph* g, char** json);

/* CSV with header re,im,abs; one row per root, 15 significant digits. */
eo_status eo_roots(const eo_graph* g, double tol, char** csv);

/* JSON array of exact rationals, entry k-1 = k-th moment of the root measure. */
eo_status eo_moments(const eo_graph* g, int k_max, char** json);

/* {"vertices":...,"edges":...,"count":"...","entropy":...,
 *  "schrijver_bound":...,"pauling_reference":...,"girth":...} */
eo_status eo_entropy(const eo_graph* g, char** json);

/* u_list: comma-separated positive rationals. CSV u,log_p_over_v. */
eo_status eo_pcurve(const eo_graph* g, const char* u_list, char** csv);

/* sizes: comma-separated increasing integers; curve: "lo:hi:steps" over
 * rationals or empty. Returns a JSON report. */
eo_status eo_sequence(const char* family, const char* sizes, const char* curve, char** json);

/* {"<hex key>":"5/6",...} for the radius-r profile. */
eo_status eo_local_profile(const eo_graph* g, int radius, char** json);

/* Exact rational as a JSON string, e.g. "\"2/3\"". */
eo_status eo_tv_distance(const eo_graph* a, const eo_graph* b, int radius, char** json);

/* Gauge-invariance certificate:
 * {"z_original":"24","z_gauged":"24","epsilon":"24","pass":true} */
eo_status eo_nfg_verify(const eo_graph* g, char** json);

#ifdef __cplusplus
}
#endif

#endif /* EORIENT_H */
