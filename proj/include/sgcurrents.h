/* Public C interface of the sine-Gordon conserved-current engine.
 *
 * The engine computes the coefficients of the extended Backlund power
 * series, builds the hierarchy of conserved currents from their closed
 * formulas, verifies their algebraic properties exactly, and runs the
 * renormalization power-counting and null-grid wavefront feasibility sweeps.
 *
 * All functions return sgc_status; results travel through out parameters.
 * Objects are opaque handles released with their _destroy function; strings
 * returned by the library are released with sgc_string_free. Handles are
 * immutable after creation and safe to share between threads.
 */
#ifndef SGCURRENTS_H
#define SGCURRENTS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sgc_status {
    SGC_OK = 0,
    SGC_ERROR_INVALID_ARGUMENT = 1,
    SGC_ERROR_DOMAIN = 2,          /* operation outside its mathematical domain */
    SGC_ERROR_TRUNCATION = 3,      /* table or series too shallow */
    SGC_ERROR_SHIFT = 4,           /* nonvanishing low series coefficient */
    SGC_ERROR_PARSE = 5,
    SGC_ERROR_IO = 6,
    SGC_ERROR_CACHE_CORRUPT = 7,
    SGC_ERROR_INTERNAL = 8
} sgc_status;

typedef enum sgc_format {
    SGC_FORMAT_TEXT = 0,
    SGC_FORMAT_JSON = 1,
    SGC_FORMAT_LATEX = 2
} sgc_format;

typedef enum sgc_component { SGC_COMPONENT_S2 = 0, SGC_COMPONENT_S1 = 1 } sgc_component;

typedef enum sgc_edge_rule {
    SGC_RULE_FEYNMAN = 0,
    SGC_RULE_ANTIFEYNMAN = 1,
    SGC_RULE_WIGHTMAN = 2
} sgc_edge_rule;

typedef struct sgc_table sgc_table; /* Backlund coefficient table */
typedef struct sgc_expr sgc_expr;   /* element of the exact jet algebra */

/* Last error message of the calling thread, valid until the next failing
 * call on the same thread. Never NULL. */
const char* sgc_last_error_message(void);

void sgc_string_free(char* s);

/* ---- Backlund table ---------------------------------------------------- */

sgc_status sgc_table_create(int max_nu, sgc_table** out);
void sgc_table_destroy(sgc_table* table);
sgc_status sgc_table_max_nu(const sgc_table* table, int* out);
sgc_status sgc_table_coefficient(const sgc_table* table, int nu, sgc_expr** out);

/* Evaluate the coupling of every coefficient at num/den. */
sgc_status sgc_table_substitute_coupling(const sgc_table* table, long num, long den,
                                         sgc_table** out);

/* Prefix of the table up to max_nu (which must not exceed its depth). */
sgc_status sgc_table_truncated(const sgc_table* table, int max_nu, sgc_table** out);

/* Whole-table artifact in the given format (the json flavour is also the
 * cache payload). */
sgc_status sgc_table_render(const sgc_table* table, sgc_format format, char** out);

/* degree(A_nu) == nu for every entry; *pass is 1/0. */
sgc_status sgc_table_check_homogeneity(const sgc_table* table, int* pass);

/* Residual of the defining parametric PDE through the given order; *pass is
 * 1 iff every coefficient vanishes. Needs max_nu >= order + 1. */
sgc_status sgc_table_check_pde(const sgc_table* table, int order, int* pass);

/* Cache round trip. Load reports SGC_OK with *out == NULL when there is no
 * usable cache (absent or stale); corruption is SGC_ERROR_CACHE_CORRUPT. */
sgc_status sgc_table_save(const sgc_table* table, const char* directory);
sgc_status sgc_table_load(const char* directory, int min_nu, sgc_table** out);

/* ---- Exact expressions ------------------------------------------------- */

void sgc_expr_destroy(sgc_expr* expr);
sgc_status sgc_expr_parse_json(const char* json_text, sgc_expr** out);
sgc_status sgc_expr_render(const sgc_expr* expr, sgc_format format, char** out);
sgc_status sgc_expr_add(const sgc_expr* a, const sgc_expr* b, sgc_expr** out);
sgc_status sgc_expr_mul(const sgc_expr* a, const sgc_expr* b, sgc_expr** out);
sgc_status sgc_expr_d_xi(const sgc_expr* expr, sgc_expr** out);
sgc_status sgc_expr_d_tau_onshell(const sgc_expr* expr, sgc_expr** out);
sgc_status sgc_expr_degree(const sgc_expr* expr, int* homogeneous, long* degree);
sgc_status sgc_expr_substitute_coupling(const sgc_expr* expr, long num, long den, sgc_expr** out);
sgc_status sgc_expr_equals(const sgc_expr* a, const sgc_expr* b, int* out);
sgc_status sgc_expr_is_zero(const sgc_expr* expr, int* out);

/* ---- Currents ----------------------------------------------------------- */

sgc_status sgc_current_s1(const sgc_table* table, int n, sgc_expr** out);
sgc_status sgc_current_s2(const sgc_table* table, int n, sgc_expr** out);

/* d_xi s1 + d_tau s2 in canonical form; the zero expr is the conservation law. */
sgc_status sgc_current_divergence(const sgc_table* table, int n, sgc_expr** out);

/* Independent series-composition derivation of (s1, s2). odd_vanish reports
 * whether the odd-order coefficients of the composed series vanished. */
sgc_status sgc_current_series_oracle(const sgc_table* table, int n, sgc_expr** s1,
                                     sgc_expr** s2, int* odd_vanish);

/* Check mask for sgc_currents_report. */
#define SGC_CHECK_DEGREES 1u
#define SGC_CHECK_CONSERVATION 2u
#define SGC_CHECK_ORACLE 4u
#define SGC_CHECK_ALL 7u

/* Runs the selected checks for N = 0..max_n and renders a report. When
 * cache_dir is non-NULL the per-N artifacts are written there. */
sgc_status sgc_currents_report(const sgc_table* table, int max_n, unsigned checks,
                               sgc_format format, const char* cache_dir, char** report,
                               int* pass);

/* ---- Renormalization power counting ------------------------------------ */

/* Ledger over l = 0..t and hbar order p = 0..p_max. *pass is 1 iff the
 * ambiguity bound matches the component degree minus two and is unchanged
 * for every smaller t and p cap. */
sgc_status sgc_powercount_report(int n, int t, sgc_component component, int p_max,
                                 sgc_format format, char** report, int* pass);

/* ---- Wavefront feasibility sweeps --------------------------------------- */

/* Exhaustive sweep; *pass is 1 iff the counterexample list is empty.
 * workers <= 0 selects the hardware concurrency. */
sgc_status sgc_wavefront_report(int n_max, int window, sgc_edge_rule rule, int workers,
                                sgc_format format, char** report, int* pass);

/* Composition criterion of the retarded-product estimate against the
 * bipartite two-point estimate for all 0 <= l <= t <= t_max. */
sgc_status sgc_hormander_check(int t_max, int* pass);

#ifdef __cplusplus
}
#endif

#endif /* SGCURRENTS_H */
