/* C interface to the weighted-blowup toolkit. */
#ifndef WBLOW_H
#define WBLOW_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define WBL_API __declspec(dllexport)
#else
#  define WBL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wbl_status {
  WBL_OK = 0,
  WBL_VERIFY_FAILED = 1, /* a report was produced and a check in it failed */
  WBL_ERR_ARGUMENT = 2,
  WBL_INCONCLUSIVE = 3,  /* a report was produced; the certificate did not fire */
  WBL_ERR_PARSE = 4,
  WBL_ERR_NOT_FOUND = 5,
  WBL_ERR_DATA = 6,
  WBL_ERR_INTERNAL = 7
} wbl_status;

typedef struct wbl_poly wbl_poly;
typedef struct wbl_report wbl_report;
typedef struct wbl_dataset wbl_dataset;

WBL_API const char* wbl_version(void);
WBL_API const char* wbl_status_name(wbl_status status);

/* Message of the last failing call on this thread ("" if none). For
   WBL_ERR_PARSE the 1-based line and column are also kept (0 otherwise). */
WBL_API const char* wbl_last_error(void);
WBL_API int wbl_last_error_line(void);
WBL_API int wbl_last_error_column(void);

/* ---- polynomials ---------------------------------------------------------- */

/* vars: comma-separated names, or NULL to number names by first appearance. */
WBL_API wbl_status wbl_poly_parse(const char* text, const char* vars, wbl_poly** out);
WBL_API void wbl_poly_free(wbl_poly* p);
WBL_API size_t wbl_poly_nvars(const wbl_poly* p);
/* Writes the canonical text into buf (NUL-terminated, truncated to cap) and
   the full length without NUL into *needed when non-NULL. */
WBL_API wbl_status wbl_poly_to_string(const wbl_poly* p, char* buf, size_t cap, size_t* needed);
/* *order = -1 stands for infinity (zero polynomial). */
WBL_API wbl_status wbl_poly_weighted_order(const wbl_poly* p, const uint32_t* weights,
                                           size_t n, int64_t* order);

/* ---- reports ---------------------------------------------------------------
   Every command below builds a report and stores it in *out whenever the
   status is WBL_OK, WBL_VERIFY_FAILED or WBL_INCONCLUSIVE; *out is NULL
   otherwise. system: polynomials separated by ',', ';' or newlines. vars:
   as for wbl_poly_parse. cap 0 selects the default truncation cap. */

WBL_API const char* wbl_report_text(const wbl_report* r);
WBL_API const char* wbl_report_json(const wbl_report* r);
WBL_API void wbl_report_free(wbl_report* r);

WBL_API wbl_status wbl_mult(const char* system, const char* vars, unsigned cap,
                            wbl_report** out);
/* scales: comma-separated positive rationals (one per divisor) or NULL. */
WBL_API wbl_status wbl_fulton(const char* system, const char* vars, const uint32_t* weights,
                              size_t n, const char* scales, unsigned cap, wbl_report** out);
WBL_API wbl_status wbl_quotient(const char* system, const char* vars, uint32_t r,
                                const uint32_t* weights, size_t n, unsigned cap,
                                wbl_report** out);
WBL_API wbl_status wbl_order(const char* system, const char* vars, const uint32_t* weights,
                             size_t n, wbl_report** out);
WBL_API wbl_status wbl_empty(const char* system, const char* vars, const uint32_t* weights,
                             size_t n, unsigned cap, wbl_report** out);
/* point: comma-separated rationals */
WBL_API wbl_status wbl_jacobian(const char* system, const char* vars, const char* point,
                                wbl_report** out);

WBL_API wbl_status wbl_threshold_lci(const uint32_t* weights, size_t n, const uint64_t* orders,
                                     size_t norders, uint32_t r, wbl_report** out);
WBL_API wbl_status wbl_threshold_cak(unsigned k, uint32_t r1, uint32_t r2, uint32_t a,
                                     wbl_report** out);
/* which: 1 for weights (1,5,3,2), 2 for weights (4,3,2,1) */
WBL_API wbl_status wbl_threshold_exceptional(int which, wbl_report** out);
WBL_API wbl_status wbl_threshold_floor(unsigned k, wbl_report** out);
WBL_API wbl_status wbl_contractions(unsigned k, unsigned a_max, wbl_report** out);

WBL_API wbl_status wbl_wps(const uint32_t* weights, size_t n, wbl_report** out);
/* names, point, variant may be NULL; without a point only the bound is reported.
   variant: "1a", "1b:m", "1c:m1,m2", "2a:r", "2b:r,m", "2c:r,m1,m2", or several
   separated by ';' (the bound is their maximum; a point needs exactly one). */
WBL_API wbl_status wbl_isolate(const uint32_t* weights, size_t n, const char* names,
                               const char* point, const char* variant, wbl_report** out);

/* ---- families dataset ------------------------------------------------------ */

WBL_API wbl_status wbl_dataset_load_default(wbl_dataset** out);
WBL_API wbl_status wbl_dataset_load_file(const char* path, wbl_dataset** out);
WBL_API void wbl_dataset_free(wbl_dataset* d);
WBL_API size_t wbl_dataset_size(const wbl_dataset* d);

WBL_API wbl_status wbl_families_verify(const wbl_dataset* d, wbl_report** out);
/* table: 1 or 2, or 0 for both */
WBL_API wbl_status wbl_families_show(const wbl_dataset* d, int family_no, int table,
                                     wbl_report** out);
/* marker: "star", "club", "heart", "spade", a full label such as "heart_3_5", or NULL */
WBL_API wbl_status wbl_families_list(const wbl_dataset* d, const char* marker, int table,
                                     wbl_report** out);

/* suite: "valuation", "corollary", "fulton" or "quotient" */
WBL_API wbl_status wbl_propcheck(const char* suite, unsigned cases, uint64_t seed, unsigned cap,
                                 wbl_report** out);

#ifdef __cplusplus
}
#endif

#endif /* WBLOW_H */
