#ifndef SLIDEPOL_SLIDEPOL_H
#define SLIDEPOL_SLIDEPOL_H

/*
 * C interface to slidepol.
 *
 * Ideals live behind opaque sp_ideal handles that also carry an optional
 * determining vector a. Operations that need a and find none use
 * lcm(I) v 1. Variable axes are 1-based. Every function returning
 * sp_status leaves a message for sp_last_error() on failure, and strings
 * handed out through char** parameters must be released with
 * sp_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(SLIDEPOL_BUILDING_LIBRARY)
#define SP_API __attribute__((visibility("default")))
#else
#define SP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sp_status {
  SP_OK = 0,
  SP_ERR_INVALID_ARGUMENT = 1,
  SP_ERR_PARSE = 2,
  SP_ERR_UNIT_IDEAL = 3,
  SP_ERR_ZERO_IDEAL = 4,
  SP_ERR_NOT_DETERMINED = 5,
  SP_ERR_PRECONDITION = 6,
  SP_ERR_CAP_EXCEEDED = 7,
  SP_ERR_INTERNAL = 8
} sp_status;

typedef enum sp_module_shape { SP_MODULE_QUOTIENT = 0, SP_MODULE_IDEAL = 1 } sp_module_shape;

typedef struct sp_limits {
  uint64_t box;
  uint64_t poset;
  uint64_t lcm_lattice;
  uint32_t vertices;
  uint32_t linquot_gens;
} sp_limits;

typedef struct sp_ideal sp_ideal;

SP_API const char* sp_version(void);
/* Message of the last failure on this thread; never NULL. */
SP_API const char* sp_last_error(void);
SP_API const char* sp_status_name(sp_status status);
SP_API void sp_limits_default(sp_limits* out);
SP_API void sp_string_free(char* s);

/* --- ideals --------------------------------------------------------------- */

SP_API sp_status sp_ideal_parse(const char* vars_csv, const char* gens, sp_ideal** out);
SP_API sp_status sp_ideal_from_json(const char* json, sp_ideal** out);
SP_API sp_status sp_ideal_to_json(const sp_ideal* ideal, char** out);
SP_API sp_status sp_ideal_render(const sp_ideal* ideal, char** out);
SP_API sp_status sp_ideal_clone(const sp_ideal* ideal, sp_ideal** out);
SP_API void sp_ideal_free(sp_ideal* ideal);

/* len == 0 clears a. */
SP_API sp_status sp_ideal_set_a(sp_ideal* ideal, const int* a, size_t len);
SP_API size_t sp_ideal_nvars(const sp_ideal* ideal);
SP_API size_t sp_ideal_ngens(const sp_ideal* ideal);
/* Exponent of variable var (1-based) in generator gen (1-based); -1 when out of range. */
SP_API int sp_ideal_exponent(const sp_ideal* ideal, size_t gen, size_t var);
SP_API int sp_ideal_equal(const sp_ideal* lhs, const sp_ideal* rhs);

/* --- functors ------------------------------------------------------------- */

SP_API sp_status sp_slide(const sp_ideal* ideal, size_t i, int j, sp_ideal** out);
SP_API sp_status sp_contract(const sp_ideal* ideal, size_t i, int j, sp_ideal** out);
/* script_json: [{"i":..,"j":..}, ...], applied in order to the core. */
SP_API sp_status sp_compress(const sp_ideal* ideal, sp_ideal** core, char** script_json);
SP_API sp_status sp_polarize(const sp_ideal* ideal, int reversed, sp_ideal** out);
SP_API sp_status sp_depolarize(const sp_ideal* ideal, sp_ideal** out);
SP_API sp_status sp_inflate(const sp_ideal* ideal, const char* var, sp_ideal** out);
SP_API sp_status sp_dual(const sp_ideal* ideal, const sp_limits* limits, sp_ideal** out);
SP_API sp_status sp_bier_murai(const sp_ideal* ideal, const sp_limits* limits, sp_ideal** out);

/* --- invariants (JSON results) -------------------------------------------- */

SP_API sp_status sp_betti_json(const sp_ideal* ideal, sp_module_shape shape, int characteristic,
                               const sp_limits* limits, char** out);
SP_API sp_status sp_depth_json(const sp_ideal* ideal, sp_module_shape shape, int characteristic,
                               const sp_limits* limits, char** out);
SP_API sp_status sp_ass_json(const sp_ideal* ideal, const sp_limits* limits, char** out);
SP_API sp_status sp_pairs_json(const sp_ideal* ideal, const sp_limits* limits, char** out);
SP_API sp_status sp_props_json(const sp_ideal* ideal, int characteristic, const sp_limits* limits,
                               char** out);
SP_API sp_status sp_linquot_json(const sp_ideal* ideal, const sp_limits* limits, char** out);
SP_API sp_status sp_sdepth_json(const sp_ideal* ideal, sp_module_shape shape, const sp_limits* limits,
                                char** out);
SP_API sp_status sp_validate_decomposition_json(const char* decomposition_json, const sp_limits* limits,
                                                char** out);
/* Certificate for the Stanley-Reisner complex of a squarefree ideal. */
SP_API sp_status sp_certify_json(const sp_ideal* squarefree, int expected_dim, const sp_limits* limits,
                                 char** out, int* pass);
/* BM_a(I), its complex, and the certificate at dimension |a| - 2. */
SP_API sp_status sp_bm_certify_json(const sp_ideal* ideal, const sp_limits* limits, char** out, int* pass);
SP_API sp_status sp_prop53_json(const sp_ideal* ideal, size_t i, int j, const sp_limits* limits, char** out,
                                int* success);

/* --- harness -------------------------------------------------------------- */

/* JSON array of suite names. */
SP_API sp_status sp_suite_names(char** out);
/*
 * config_json keys (all optional except suite): suite, trials, seed, n,
 * max_exponent, max_gens, characteristic, workers, max_skip_ratio, and caps
 * {box, poset, lcm_lattice, vertices, linquot_gens}.
 */
SP_API sp_status sp_verify(const char* config_json, char** report_json, size_t* violations,
                           int* cap_fatal);

#ifdef __cplusplus
}
#endif

#endif
