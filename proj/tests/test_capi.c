/* Exercises the shared library through its C header only. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "wblow.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

static int contains(const char* hay, const char* needle) {
  return hay && strstr(hay, needle) != NULL;
}

static void polynomials(void) {
  wbl_poly* p = NULL;
  EXPECT(wbl_poly_parse("y + x^2 - 1/2*x*y", "x,y", &p) == WBL_OK);
  EXPECT(p != NULL);
  EXPECT(wbl_poly_nvars(p) == 2);

  char buf[64];
  size_t need = 0;
  EXPECT(wbl_poly_to_string(p, buf, sizeof buf, &need) == WBL_OK);
  EXPECT(strcmp(buf, "x^2 - 1/2*x*y + y") == 0);
  EXPECT(need == strlen(buf));

  char tiny[4];
  EXPECT(wbl_poly_to_string(p, tiny, sizeof tiny, &need) == WBL_OK);
  EXPECT(strcmp(tiny, "x^2") == 0);
  EXPECT(need == strlen("x^2 - 1/2*x*y + y"));

  const uint32_t w[] = {1, 1};
  int64_t order = 0;
  EXPECT(wbl_poly_weighted_order(p, w, 2, &order) == WBL_OK);
  EXPECT(order == 1);
  EXPECT(wbl_poly_weighted_order(p, w, 1, &order) == WBL_ERR_ARGUMENT);
  wbl_poly_free(p);

  wbl_poly* zero = NULL;
  EXPECT(wbl_poly_parse("x - x", NULL, &zero) == WBL_OK);
  EXPECT(wbl_poly_weighted_order(zero, w, 1, &order) == WBL_OK);
  EXPECT(order == -1);
  wbl_poly_free(zero);

  wbl_poly* bad = (wbl_poly*)1;
  EXPECT(wbl_poly_parse("x +\n* y", NULL, &bad) == WBL_ERR_PARSE);
  EXPECT(bad == NULL);
  EXPECT(wbl_last_error_line() == 2);
  EXPECT(wbl_last_error_column() == 1);
  EXPECT(strlen(wbl_last_error()) > 0);
  EXPECT(wbl_poly_parse(NULL, NULL, &bad) == WBL_ERR_ARGUMENT);
  EXPECT(wbl_poly_parse("x", NULL, NULL) == WBL_ERR_ARGUMENT);
}

static void reports(void) {
  wbl_report* r = NULL;
  EXPECT(wbl_mult("x^2+y^3, y^2", NULL, 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "value: 4"));
  EXPECT(contains(wbl_report_json(r), "\"value\": 4"));
  EXPECT(strlen(wbl_last_error()) == 0);
  wbl_report_free(r);

  EXPECT(wbl_mult("x*y, x", NULL, 10, &r) == WBL_INCONCLUSIVE);
  EXPECT(r != NULL);
  EXPECT(contains(wbl_report_text(r), "inconclusive"));
  wbl_report_free(r);

  EXPECT(wbl_mult("x^2, y^", NULL, 0, &r) == WBL_ERR_PARSE);
  EXPECT(r == NULL);

  const uint32_t w23[] = {2, 3};
  EXPECT(wbl_fulton("x^2-y^3, y", NULL, w23, 2, NULL, 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "residual: 0"));
  wbl_report_free(r);

  const uint32_t bad_w[] = {2, 4};
  EXPECT(wbl_fulton("x^2-y^3, y", NULL, bad_w, 2, NULL, 0, &r) == WBL_ERR_ARGUMENT);

  const uint32_t w11[] = {1, 1};
  EXPECT(wbl_quotient("x^2, y^2", NULL, 2, w11, 2, 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_json(r), "\"multiplicity\": \"2\""));
  wbl_report_free(r);

  const uint32_t w1532[] = {1, 5, 3, 2};
  const uint64_t six[] = {6};
  EXPECT(wbl_threshold_lci(w1532, 4, six, 1, 1, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "threshold: 16/5"));
  wbl_report_free(r);

  EXPECT(wbl_threshold_exceptional(2, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "9/4"));
  wbl_report_free(r);
  EXPECT(wbl_threshold_exceptional(3, &r) == WBL_ERR_ARGUMENT);

  EXPECT(wbl_threshold_cak(2, 1, 2, 1, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "threshold: 3/2"));
  wbl_report_free(r);

  const uint32_t space[] = {1, 2, 3};
  EXPECT(wbl_isolate(space, 3, NULL, "1,0,0", NULL, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "bound: 3"));
  wbl_report_free(r);
  EXPECT(wbl_isolate(space, 3, NULL, "0,0,0", NULL, &r) == WBL_ERR_ARGUMENT);

  EXPECT(wbl_wps(space, 3, &r) == WBL_OK);
  wbl_report_free(r);

  EXPECT(wbl_jacobian("x^2+y^2, x*y", NULL, "0,0", &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "rank: 0"));
  wbl_report_free(r);

  EXPECT(wbl_propcheck("valuation", 20, 7, 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "failures: 0"));
  wbl_report_free(r);
  EXPECT(wbl_propcheck("unknown", 20, 7, 0, &r) == WBL_ERR_ARGUMENT);

  EXPECT(wbl_mult("x", NULL, 0, NULL) == WBL_ERR_ARGUMENT);
}

static void dataset(void) {
  wbl_dataset* d = NULL;
  EXPECT(wbl_dataset_load_default(&d) == WBL_OK);
  EXPECT(wbl_dataset_size(d) == 95);

  wbl_report* r = NULL;
  EXPECT(wbl_families_verify(d, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "passed: 95"));
  wbl_report_free(r);

  EXPECT(wbl_families_show(d, 89, 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "k_cA: 19"));
  wbl_report_free(r);

  EXPECT(wbl_families_show(d, 999, 0, &r) == WBL_ERR_NOT_FOUND);
  EXPECT(r == NULL);

  EXPECT(wbl_families_list(d, "spade", 0, &r) == WBL_OK);
  EXPECT(contains(wbl_report_text(r), "count: 2"));
  wbl_report_free(r);
  wbl_dataset_free(d);

  EXPECT(wbl_dataset_load_file("/nonexistent.tsv", &d) == WBL_ERR_NOT_FOUND);
  EXPECT(d == NULL);
  EXPECT(wbl_families_verify(NULL, &r) == WBL_ERR_ARGUMENT);
}

int main(void) {
  EXPECT(strcmp(wbl_status_name(WBL_INCONCLUSIVE), "inconclusive") == 0);
  EXPECT(strlen(wbl_version()) > 0);
  polynomials();
  reports();
  dataset();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return EXIT_FAILURE;
  }
  puts("capi: all checks passed");
  return EXIT_SUCCESS;
}
