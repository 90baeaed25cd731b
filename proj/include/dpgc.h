/* dpgc: double port graph compiler for adaptive quantum computation.
 *
 * C API of the shared library. All functions return DPGC_OK on success; on
 * failure they return an error code and the message is available through
 * dpgc_last_error() (thread local). Objects are opaque handles released with
 * the matching *_free function; strings returned through out parameters are
 * released with dpgc_string_free.
 */
#ifndef DPGC_H
#define DPGC_H

#if defined(_WIN32) || defined(_WIN64)
#define DPGC_API __declspec(dllexport)
#else
#define DPGC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dpgc_status {
  DPGC_OK = 0,
  DPGC_ERR_INTERNAL = 1, /* bug or resource failure */
  DPGC_ERR_INVALID = 2   /* malformed input or violated precondition */
} dpgc_status;

typedef struct dpgc_graph dpgc_graph;
typedef struct dpgc_instrument dpgc_instrument;
typedef struct dpgc_scenario dpgc_scenario;

DPGC_API const char* dpgc_version(void);
DPGC_API const char* dpgc_last_error(void);
DPGC_API void dpgc_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* Parses and validates a graph file (JSON document, see README). */
DPGC_API dpgc_status dpgc_graph_parse(const char* json, dpgc_graph** out);
DPGC_API dpgc_status dpgc_graph_to_json(const dpgc_graph* g, char** out_json);
DPGC_API void dpgc_graph_free(dpgc_graph* g);

/* The graph's declared model, e.g. "C", "M[pi/4]", "Q", "P~". */
DPGC_API dpgc_status dpgc_graph_model(const dpgc_graph* g, char** out_model);

/* Canonical-form digest; equal digests mean isomorphic labeled graphs. */
DPGC_API dpgc_status dpgc_graph_digest(const dpgc_graph* g, char** out_digest);
DPGC_API dpgc_status dpgc_graph_isomorphic(const dpgc_graph* a, const dpgc_graph* b, int* out);

/* vertical nonzero composes bottom under top; zero composes left to right */
DPGC_API dpgc_status dpgc_graph_compose(const dpgc_graph* a, const dpgc_graph* b, int vertical,
                               dpgc_graph** out);

/* converter is one of qc-to-mbqc, qc-to-qcm, qc-to-mbpc, mbpc-to-qcm,
 * boolean-expansion */
DPGC_API dpgc_status dpgc_graph_convert(const dpgc_graph* g, const char* converter, dpgc_graph** out);

/* Expands gadget-named labels (J, teleport, T-gadget, H-mbpc, GHZn). */
DPGC_API dpgc_status dpgc_graph_expand_gadgets(const dpgc_graph* g, dpgc_graph** out);

/* Builds a named gadget graph, e.g. "J(pi/4)", "teleport", "GHZ(3)", "OR". */
DPGC_API dpgc_status dpgc_gadget(const char* name, dpgc_graph** out);

/* ---- evaluation --------------------------------------------------------- */

DPGC_API dpgc_status dpgc_graph_eval(const dpgc_graph* g, dpgc_instrument** out);
DPGC_API dpgc_status dpgc_instrument_to_json(const dpgc_instrument* phi, char** out_json);
DPGC_API void dpgc_instrument_free(dpgc_instrument* phi);

/* state_spec: "ghz:N", "zero:N", "maxmixed:N" or a JSON matrix document;
 * input_bits: the classical input as a 0/1 string of length k */
DPGC_API dpgc_status dpgc_born(const dpgc_graph* g, const char* state_spec, const char* input_bits,
                      char** out_json);

/* The prep/measure/correct split; returns the three graph files plus the
 * semantic-equality report as JSON strings. */
DPGC_API dpgc_status dpgc_standard_form(const dpgc_graph* g, char** out_prep, char** out_meas,
                               char** out_corr, char** out_report);

/* ---- contextuality ------------------------------------------------------ */

DPGC_API dpgc_status dpgc_scenario_parse(const char* json, dpgc_scenario** out);
DPGC_API void dpgc_scenario_free(dpgc_scenario* sc);

/* {"ncf":v,"cf":v,"strong":bool}; exact nonzero switches to rational strings */
DPGC_API dpgc_status dpgc_ncf(const dpgc_scenario* sc, int exact, char** out_json);

/* Runs the computational-power bound on a bound-check spec document. */
DPGC_API dpgc_status dpgc_bound_check(const char* spec_json, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* DPGC_H */
