/*
 * C interface to the sdcodes library: minimal-shadow weight enumerators of
 * singly even self-dual codes and a GF(2) code engine.
 *
 * Conventions:
 *  - Every function returns an sdc_status; SDC_OK is zero.
 *  - Objects are opaque handles released with the matching *_free call.
 *  - Strings returned through char** are heap allocated and must be released
 *    with sdc_string_free.
 *  - On failure, sdc_last_error() describes the most recent error on the
 *    calling thread.
 *  - Exact numbers cross the boundary as decimal strings ("1575", "-9/128")
 *    and affine forms as "35 - 8*beta".
 */
#ifndef SDCODES_H
#define SDCODES_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(SDC_BUILDING_LIBRARY)
#define SDC_API __declspec(dllexport)
#else
#define SDC_API __declspec(dllimport)
#endif
#elif defined(__GNUC__)
#define SDC_API __attribute__((visibility("default")))
#else
#define SDC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdc_status {
  SDC_OK = 0,
  SDC_E_INVALID_ARGUMENT = 1,
  SDC_E_PARSE = 2,
  SDC_E_PRECONDITION = 3,
  SDC_E_NO_SOLUTION = 4,
  SDC_E_SINGULAR = 5,
  SDC_E_LIMIT = 6,
  SDC_E_VERIFICATION = 7,
  SDC_E_INTERNAL = 8
} sdc_status;

typedef enum sdc_family {
  SDC_FAMILY_24M2 = 0,
  SDC_FAMILY_24M4 = 1,
  SDC_FAMILY_24M6 = 2,
  SDC_FAMILY_24M10 = 3,
  SDC_FAMILY_24M22 = 4
} sdc_family;

typedef enum sdc_parity { SDC_DOUBLY_EVEN = 0, SDC_SINGLY_EVEN = 1, SDC_NEITHER = 2 } sdc_parity;

typedef enum sdc_side { SDC_SIDE_CODE = 0, SDC_SIDE_SHADOW = 1 } sdc_side;

typedef enum sdc_table { SDC_ALPHA_PRIME = 0, SDC_ALPHA = 1, SDC_BETA_PRIME = 2, SDC_BETA = 3 } sdc_table;

typedef struct sdc_enumerator sdc_enumerator;
typedef struct sdc_tables sdc_tables;
typedef struct sdc_code sdc_code;

SDC_API const char* sdc_version(void);
SDC_API const char* sdc_status_string(sdc_status status);
SDC_API const char* sdc_last_error(void);
SDC_API void sdc_string_free(char* s);

/* ------------------------------------------------------------ families */

SDC_API sdc_status sdc_family_parse(const char* name, sdc_family* out);
SDC_API const char* sdc_family_name(sdc_family family);
/* Length n = 24m + 8l + 2r of a family member. */
SDC_API sdc_status sdc_family_length(sdc_family family, long m, long* n);
SDC_API sdc_status sdc_family_min_weight(sdc_family family, long m, long* d);
SDC_API sdc_status sdc_rains_bound(long n, long* out);
SDC_API sdc_status sdc_minimal_shadow_r(long n, int* out);

/* --------------------------------------------------------- enumerators */

/* Solve the minimal-shadow constraints of (family, m). */
SDC_API sdc_status sdc_solve(sdc_family family, long m, sdc_enumerator** out);
/* Copy of e with beta replaced by the given rational (decimal string). */
SDC_API sdc_status sdc_enumerator_substitute(const sdc_enumerator* e, const char* name, const char* value,
                                             sdc_enumerator** out);
SDC_API void sdc_enumerator_free(sdc_enumerator* e);
SDC_API long sdc_enumerator_length(const sdc_enumerator* e);
SDC_API int sdc_enumerator_r(const sdc_enumerator* e);
SDC_API size_t sdc_enumerator_count(const sdc_enumerator* e, sdc_side side);
/* Coefficient i as an affine form string; the exponent of y is 2i on the
 * code side and 4i + r on the shadow side. */
SDC_API sdc_status sdc_enumerator_coefficient(const sdc_enumerator* e, sdc_side side, size_t i, char** out);
SDC_API size_t sdc_enumerator_parameter_count(const sdc_enumerator* e);
SDC_API sdc_status sdc_enumerator_parameter(const sdc_enumerator* e, size_t i, char** out);
/* ok = 1 iff every coefficient is a nonnegative integer; otherwise the
 * first offender is reported (side, index, value). Fails with
 * SDC_E_PRECONDITION while parameters remain. */
SDC_API sdc_status sdc_enumerator_admissible(const sdc_enumerator* e, int* ok, sdc_side* bad_side, size_t* bad_index,
                                             char** bad_value);

SDC_API sdc_status sdc_beta_range(sdc_family family, long m, long* lo, long* hi);

/* -------------------------------------------------- closed forms, scans */

SDC_API sdc_status sdc_closed_form_bm(sdc_family family, long m, char** out);
SDC_API sdc_status sdc_closed_form_bm1(sdc_family family, long m, char** out);
SDC_API sdc_status sdc_closed_form_a2m1(long m, char** out);
SDC_API sdc_status sdc_evaluate_f(sdc_family family, long m, char** out);
/* f(m) coefficients, ascending powers, as a comma-separated list. */
SDC_API sdc_status sdc_f_coefficients(sdc_family family, char** out);
SDC_API sdc_status sdc_largest_root_bracket(sdc_family family, long* lo, long* hi);

/* Admissibility for m = 1..m_max; admissible must hold m_max entries.
 * Results do not depend on jobs. */
SDC_API sdc_status sdc_scan(sdc_family family, long m_max, unsigned jobs, int* admissible, long* max_admissible);
/* Same for an explicit list of m values. */
SDC_API sdc_status sdc_scan_values(sdc_family family, const long* ms, size_t count, unsigned jobs, int* admissible);

/* ------------------------------------------------------ transform tables */

/* Tables for n = 24m + 8l + 2r (any even n > 0). */
SDC_API sdc_status sdc_tables_create(long n, sdc_tables** out);
SDC_API void sdc_tables_free(sdc_tables* t);
SDC_API size_t sdc_tables_size(const sdc_tables* t);
SDC_API sdc_status sdc_tables_entry(const sdc_tables* t, sdc_table which, size_t i, size_t j, char** out);
/* Compare the closed forms for alpha_{i,0} and beta_{i,j} with the matrix
 * entries; mismatches counts the disagreeing entries. */
SDC_API sdc_status sdc_tables_check_alpha_closed(const sdc_tables* t, size_t* mismatches);
SDC_API sdc_status sdc_tables_check_beta_closed(const sdc_tables* t, size_t* mismatches);

/* --------------------------------------------------------------- codes */

/* rows: k strings of '0'/'1' of equal length. */
SDC_API sdc_status sdc_code_from_rows(const char* const* rows, size_t k, sdc_code** out);
SDC_API sdc_status sdc_code_read_file(const char* path, sdc_code** out);
SDC_API sdc_status sdc_code_write_file(const sdc_code* c, const char* path);
/* The circulant code C46 = [I_23 | R]. */
SDC_API sdc_status sdc_code_c46(sdc_code** out);
SDC_API void sdc_code_free(sdc_code* c);
SDC_API size_t sdc_code_length(const sdc_code* c);
SDC_API size_t sdc_code_dimension(const sdc_code* c);
SDC_API sdc_status sdc_code_row(const sdc_code* c, size_t i, char** out);
SDC_API sdc_status sdc_code_is_self_dual(const sdc_code* c, int* out);
SDC_API sdc_status sdc_code_parity(const sdc_code* c, sdc_parity* out);
/* counts must hold length + 1 entries. */
SDC_API sdc_status sdc_code_weight_distribution(const sdc_code* c, uint64_t* counts);
SDC_API sdc_status sdc_code_min_distance(const sdc_code* c, long* d);
/* Shadow weight counts (length + 1 entries), d(S) and the minimal-shadow flag. */
SDC_API sdc_status sdc_code_shadow(const sdc_code* c, uint64_t* counts, long* shadow_min_weight, int* minimal);
/* support: 1-based positions. */
SDC_API sdc_status sdc_code_neighbor(const sdc_code* c, const size_t* support, size_t count, sdc_code** out);
SDC_API sdc_status sdc_code_extract_beta(const sdc_code* c, sdc_family family, long m, long* beta);
SDC_API sdc_status sdc_code_macwilliams_ok(const sdc_code* c, int* ok);

/* --------------------------------------------------------- neighbor table */

typedef struct sdc_table1_row {
  size_t index;
  size_t support[46];
  size_t support_len;
  long expected_beta;
  long beta;
  size_t n;
  size_t k;
  long d;
  int self_dual;
  int singly_even;
  int minimal_shadow;
  int verified;
} sdc_table1_row;

SDC_API size_t sdc_table1_count(void);
/* Verify one row (1-based) of the neighbor table against C46. */
SDC_API sdc_status sdc_table1_row_verify(size_t index, sdc_table1_row* out);

#ifdef __cplusplus
}
#endif

#endif /* SDCODES_H */
