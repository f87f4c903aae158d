/* Exercises every exported function through the public header. Prints
 * "ok" on success; any failure exits nonzero with a message. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "tqs.h"

static void require(int cond, const char *what) {
  if (!cond) {
    char msg[256] = {0};
    tqs_last_error(msg, sizeof msg);
    fprintf(stderr, "FAILED: %s (%s)\n", what, msg);
    exit(1);
  }
}

int main(void) {
  require(strlen(tqs_version()) > 0, "version string");

  uint64_t terms[16];
  size_t written = 0;
  require(tqs_hj_expand(8, 5, terms, 16, &written) == TQS_OK, "hj_expand status");
  require(written == 3 && terms[0] == 2 && terms[1] == 3 && terms[2] == 2,
          "hj_expand value");
  require(tqs_hj_expand(8, 6, terms, 16, &written) == TQS_INVALID_ARGUMENT,
          "hj_expand rejects non-coprime input");

  bool flag = false;
  require(tqs_is_critical_pair(8, 7, &flag) == TQS_OK && flag, "critical (8,7)");
  require(tqs_is_critical_pair(8, 5, &flag) == TQS_OK && !flag, "critical (8,5)");
  require(tqs_is_type_r(4, 3, 0, &flag) == TQS_OK && !flag, "type R (4,3)");
  require(tqs_is_type_r(5, 4, 0, &flag) == TQS_OK && flag, "type R (5,4)");

  uint64_t inv = 0;
  require(tqs_mod_inverse(3, 16, &inv) == TQS_OK && inv == 11, "mod inverse");

  uint64_t factors[2] = {2, 4};
  require(tqs_abelian_is_r2(factors, 2, &flag) == TQS_OK && !flag,
          "C2 x C4 is not R2");

  const char *json =
      "{\"conductor\": 4, \"generators\": ["
      "[[\"0\", \"1*z4^1\"], [\"1*z4^1\", \"0\"]],"
      "[[\"-1\", \"0\"], [\"0\", \"-1\"]]]}";
  TqsGroup *g = NULL;
  require(tqs_group_from_json(json, 1000, &g) == TQS_OK, "group from JSON");
  require(tqs_group_order(g) == 4, "group order");
  require(tqs_group_center_order(g) == 2, "center order");
  require(tqs_group_reflection_order(g) == 1, "reflection order");

  char tag[8] = {0};
  require(tqs_group_pgl_image(g, tag, sizeof tag) == TQS_OK, "pgl image status");
  require(strcmp(tag, "C2") == 0, "pgl image tag");

  TqsSingularityKind kind;
  uint64_t n = 0, d = 0;
  require(tqs_group_singularity(g, &kind, &n, &d, &flag) == TQS_OK,
          "singularity status");
  require(kind == TQS_SINGULARITY_CYCLIC && n == 4 && d == 3 && !flag,
          "singularity value");
  tqs_group_free(g);

  TqsGroup *fam = NULL;
  require(tqs_group_from_family("muD", 2, 1, 1000, &fam) == TQS_OK,
          "family group");
  require(tqs_group_order(fam) == 8, "family order");
  tqs_group_free(fam);

  require(tqs_family_predicted_not_r("muS4", 3, 0, &flag) == TQS_OK && flag,
          "prediction for muS4 q=3");

  printf("ok\n");
  return 0;
}
