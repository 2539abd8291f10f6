/* SPDX-License-Identifier: Apache-2.0 */
#ifndef CTXLOGIC_H
#define CTXLOGIC_H

/*
 * C API of the contextual-logic engine.
 *
 * All functions return a ctxl_status; results come back through out
 * parameters. Objects are opaque handles created and destroyed by the
 * matching _free function. Handles derived from another handle (sections
 * from posets, for instance) keep their parent alive internally, so any
 * destruction order is safe. Strings returned through char** out parameters
 * are heap-allocated; release them with ctxl_string_free.
 *
 * On any status other than CTXL_OK, ctxl_last_error() returns a
 * thread-local description of the failure.
 */

#if defined(_WIN32)
#  define CTXL_API __declspec(dllexport)
#else
#  define CTXL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ctxl_status {
    CTXL_OK = 0,
    CTXL_ERROR_INVALID_ARGUMENT = 1,
    CTXL_ERROR_PARSE = 2,
    CTXL_ERROR_VALIDATION = 3,
    CTXL_ERROR_NOT_FOUND = 4,
    CTXL_ERROR_IO = 5,
    CTXL_ERROR_INTERNAL = 6
} ctxl_status;

/* Validated ray-set / decomposition family, as loaded from a file. */
typedef struct ctxl_rayset ctxl_rayset;
/* Coarsening-closed context poset built from a ray set. */
typedef struct ctxl_poset ctxl_poset;
/* Principal local section of the spectral sheaf over a poset. */
typedef struct ctxl_section ctxl_section;
/* Kripke model: poset + section + atom bindings. */
typedef struct ctxl_model ctxl_model;

CTXL_API const char* ctxl_version(void);
/* Message of the most recent failure on this thread; never NULL. */
CTXL_API const char* ctxl_last_error(void);
CTXL_API void ctxl_string_free(char* s);

/* FNV-1a 64-bit digest of a file, as 16 hex characters. */
CTXL_API ctxl_status ctxl_file_digest(const char* path, char** out_hex);

CTXL_API ctxl_status ctxl_rayset_load_file(const char* path, ctxl_rayset** out);
CTXL_API ctxl_status ctxl_rayset_load_string(const char* json_text, ctxl_rayset** out);
CTXL_API void ctxl_rayset_free(ctxl_rayset* rs);
/* Validation payload: contexts, ray counts, per-ray context memberships. */
CTXL_API ctxl_status ctxl_rayset_validate(const ctxl_rayset* rs, char** report_json);

/* close_joins != 0 additionally closes the poset under common refinements
 * of compatible contexts. */
CTXL_API ctxl_status ctxl_poset_build(const ctxl_rayset* rs, int close_joins,
                                      ctxl_poset** out);
CTXL_API void ctxl_poset_free(ctxl_poset* p);
CTXL_API ctxl_status ctxl_poset_node_count(const ctxl_poset* p, int* out);
/* Node/edge listing. */
CTXL_API ctxl_status ctxl_poset_summary(const ctxl_poset* p, char** report_json);
/* Summary plus maximal contexts with explicit atom matrices; the output is
 * itself a valid decomposition file. */
CTXL_API ctxl_status ctxl_poset_json(const ctxl_poset* p, char** out_json);
/* Graphviz rendering of the covering relation. */
CTXL_API ctxl_status ctxl_poset_dot(const ctxl_poset* p, char** out_dot);

/* Global-section search plus parity obstruction. *has_global is 1 when a
 * global section exists, else 0; the report carries the section (or null),
 * the explored-assignment count and the parity verdict. */
CTXL_API ctxl_status ctxl_ks_check(const ctxl_poset* p, int* has_global,
                                   char** report_json);

/* atom is a ray name or a decimal atom index within the base context. */
CTXL_API ctxl_status ctxl_section_principal(const ctxl_poset* p, const char* base_context,
                                            const char* atom, ctxl_section** out);
CTXL_API void ctxl_section_free(ctxl_section* s);
/* The section file form: { "base_context": ..., "selected_atom": ... } */
CTXL_API ctxl_status ctxl_section_file_json(const ctxl_section* s, char** out_json);
/* File form plus domain size. */
CTXL_API ctxl_status ctxl_section_report(const ctxl_section* s, char** report_json);

CTXL_API ctxl_status ctxl_model_load_file(const char* path, ctxl_model** out);
CTXL_API void ctxl_model_free(ctxl_model* m);
/* Evaluation payload: formula, value / negation / border context ids. */
CTXL_API ctxl_status ctxl_model_eval(const ctxl_model* m, const char* formula,
                                     char** report_json);
/* Boolean information the `from` context carries about the `about` one. */
CTXL_API ctxl_status ctxl_model_witness(const ctxl_model* m, const char* from_context,
                                        const char* about_context, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* CTXLOGIC_H */
