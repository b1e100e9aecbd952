/* Exercises the C interface from C, linking only the shared library. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "slidepol/slidepol.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int contains(const char* haystack, const char* needle) {
  return haystack != NULL && strstr(haystack, needle) != NULL;
}

static void test_parse_and_render(void) {
  sp_ideal* i = NULL;
  char* text = NULL;
  EXPECT(sp_ideal_parse("x,y,z,w", "x*y*z, x*w, y*w", &i) == SP_OK);
  EXPECT(sp_ideal_nvars(i) == 4);
  EXPECT(sp_ideal_ngens(i) == 3);
  EXPECT(sp_ideal_exponent(i, 3, 1) == 1);
  EXPECT(sp_ideal_exponent(i, 9, 1) == -1);
  EXPECT(sp_ideal_render(i, &text) == SP_OK);
  EXPECT(strcmp(text, "y*w, x*w, x*y*z") == 0);
  sp_string_free(text);

  EXPECT(sp_ideal_to_json(i, &text) == SP_OK);
  sp_ideal* back = NULL;
  EXPECT(sp_ideal_from_json(text, &back) == SP_OK);
  EXPECT(sp_ideal_equal(i, back));
  sp_string_free(text);
  sp_ideal_free(back);
  sp_ideal_free(i);
}

static void test_errors(void) {
  sp_ideal* i = NULL;
  EXPECT(sp_ideal_parse("x,y", "x*q", &i) == SP_ERR_PARSE);
  EXPECT(i == NULL);
  EXPECT(strlen(sp_last_error()) > 0);
  EXPECT(sp_ideal_parse("x,y", "1", &i) == SP_ERR_UNIT_IDEAL);
  EXPECT(sp_ideal_parse(NULL, "x", &i) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_ideal_from_json("{\"vars\": [", &i) == SP_ERR_PARSE);
  EXPECT(strcmp(sp_status_name(SP_ERR_CAP_EXCEEDED), "cap exceeded") == 0);

  EXPECT(sp_ideal_parse("x,y", "x*y", &i) == SP_OK);
  sp_ideal* out = NULL;
  EXPECT(sp_contract(i, 1, 1, &out) == SP_ERR_PRECONDITION);
  EXPECT(sp_slide(i, 3, 1, &out) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_slide(i, 1, 0, &out) == SP_ERR_INVALID_ARGUMENT);
  int a[2] = {0, 1};
  EXPECT(sp_ideal_set_a(i, a, 2) != SP_OK);
  sp_ideal_free(i);

  sp_limits lim;
  sp_limits_default(&lim);
  lim.poset = 2;
  char* json = NULL;
  EXPECT(sp_ideal_parse("x,y", "x^3, y^3", &i) == SP_OK);
  EXPECT(sp_sdepth_json(i, SP_MODULE_QUOTIENT, &lim, &json) == SP_ERR_CAP_EXCEEDED);
  sp_ideal_free(i);
}

static void test_functors(void) {
  sp_ideal *i = NULL, *slid = NULL, *expected = NULL, *dual = NULL, *core = NULL;
  char* script = NULL;
  EXPECT(sp_ideal_parse("x,y,z,w", "x*y*z, x*w, y*w", &i) == SP_OK);
  EXPECT(sp_slide(i, 1, 1, &slid) == SP_OK);
  EXPECT(sp_ideal_parse("x,y,z,w", "x^2*y*z, x^2*w, y*w", &expected) == SP_OK);
  EXPECT(sp_ideal_equal(slid, expected));

  EXPECT(sp_dual(i, NULL, &dual) == SP_OK);
  sp_ideal* golden = NULL;
  EXPECT(sp_ideal_parse("x,y,z,w", "x*y, x*w, y*w, z*w", &golden) == SP_OK);
  EXPECT(sp_ideal_equal(dual, golden));
  sp_ideal_free(dual);

  int a[4] = {2, 1, 1, 1};
  EXPECT(sp_ideal_set_a(slid, a, 4) == SP_OK);
  EXPECT(sp_dual(slid, NULL, &dual) == SP_OK);
  EXPECT(sp_ideal_equal(dual, golden));

  sp_ideal* cubic = NULL;
  EXPECT(sp_ideal_parse("x,y", "x^3, x^2*y, y^3", &cubic) == SP_OK);
  EXPECT(sp_compress(cubic, &core, &script) == SP_OK);
  EXPECT(contains(script, "\"i\""));
  sp_ideal* quad = NULL;
  EXPECT(sp_ideal_parse("x,y", "x^2, x*y, y^2", &quad) == SP_OK);
  EXPECT(sp_ideal_equal(core, quad));

  sp_ideal *pol = NULL, *depol = NULL, *infl = NULL;
  EXPECT(sp_polarize(quad, 0, &pol) == SP_OK);
  EXPECT(sp_depolarize(pol, &depol) == SP_OK);
  EXPECT(sp_ideal_equal(depol, quad));
  EXPECT(sp_inflate(i, "x", &infl) == SP_OK);
  EXPECT(sp_ideal_nvars(infl) == 5);
  EXPECT(sp_inflate(i, "nope", &infl) == SP_ERR_INVALID_ARGUMENT);

  sp_ideal* bm = NULL;
  EXPECT(sp_bier_murai(i, NULL, &bm) == SP_OK);
  EXPECT(sp_ideal_ngens(bm) == 11);

  sp_ideal* copy = NULL;
  EXPECT(sp_ideal_clone(bm, &copy) == SP_OK);
  EXPECT(sp_ideal_equal(copy, bm));

  sp_ideal_free(copy);
  sp_ideal_free(bm);
  sp_ideal_free(infl);
  sp_ideal_free(depol);
  sp_ideal_free(pol);
  sp_ideal_free(quad);
  sp_ideal_free(cubic);
  sp_string_free(script);
  sp_ideal_free(core);
  sp_ideal_free(golden);
  sp_ideal_free(dual);
  sp_ideal_free(expected);
  sp_ideal_free(slid);
  sp_ideal_free(i);
}

static void test_invariants(void) {
  sp_ideal* i = NULL;
  char* json = NULL;
  int pass = 0;
  EXPECT(sp_ideal_parse("x,y", "x^2, x*y, y^2", &i) == SP_OK);
  EXPECT(sp_betti_json(i, SP_MODULE_IDEAL, 0, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"projdim\":1"));
  sp_string_free(json);
  EXPECT(sp_depth_json(i, SP_MODULE_QUOTIENT, 0, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"depth\":0"));
  sp_string_free(json);
  EXPECT(sp_ass_json(i, NULL, &json) == SP_OK);
  sp_string_free(json);
  EXPECT(sp_pairs_json(i, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"adeg\":3"));
  sp_string_free(json);
  EXPECT(sp_props_json(i, 0, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"cohen_macaulay\":true"));
  sp_string_free(json);
  EXPECT(sp_linquot_json(i, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"linear_quotients\":true"));
  sp_string_free(json);
  EXPECT(sp_sdepth_json(i, SP_MODULE_IDEAL, NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"sdepth\":1"));
  sp_string_free(json);
  sp_ideal_free(i);

  EXPECT(sp_ideal_parse("x,y,z,w", "x*y*z, x*w, y*w", &i) == SP_OK);
  EXPECT(sp_bm_certify_json(i, NULL, &json, &pass) == SP_OK);
  EXPECT(pass == 1);
  sp_string_free(json);
  EXPECT(sp_prop53_json(i, 1, 2, NULL, &json, &pass) == SP_OK);
  EXPECT(pass == 1);
  sp_string_free(json);
  sp_ideal_free(i);

  EXPECT(sp_validate_decomposition_json(
             "{\"module\":\"quotient\",\"ideal\":{\"vars\":[\"x\",\"y\"],\"gens\":[\"x\"]},"
             "\"spaces\":[{\"degree\":[0,0],\"free\":[\"y\"]}]}",
             NULL, &json) == SP_OK);
  EXPECT(contains(json, "\"valid\":true"));
  sp_string_free(json);
}

static void test_harness(void) {
  char* report = NULL;
  size_t violations = 99;
  int fatal = 1;
  EXPECT(sp_suite_names(&report) == SP_OK);
  EXPECT(contains(report, "thm32"));
  sp_string_free(report);
  EXPECT(sp_verify("{\"suite\":\"prop22\",\"trials\":10,\"seed\":3}", &report, &violations, &fatal) == SP_OK);
  EXPECT(violations == 0);
  EXPECT(fatal == 0);
  EXPECT(contains(report, "\"completed\": 10"));
  sp_string_free(report);
  EXPECT(sp_verify("{\"suite\":\"thm32\",\"trials\":5,\"caps\":{\"poset\":0}}", &report, &violations, &fatal) ==
         SP_OK);
  EXPECT(fatal == 1);
  sp_string_free(report);
  EXPECT(sp_verify("{\"trials\":3}", &report, &violations, &fatal) == SP_ERR_INVALID_ARGUMENT);
  EXPECT(sp_verify("not json", &report, &violations, &fatal) == SP_ERR_PARSE);
}

int main(void) {
  EXPECT(strcmp(sp_version(), "0.1.0") == 0);
  test_parse_and_render();
  test_errors();
  test_functors();
  test_invariants();
  test_harness();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
