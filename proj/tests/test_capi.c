/* Exercises the shared-library interface from plain C. */
#include <stdio.h>
#include <string.h>

#include "critmono.h"

static int failures = 0;

#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);   \
      failures++;                                                       \
    }                                                                   \
  } while (0)

static const char* kSqrt =
    "{\"degree\": 2, \"parameters\": [\"u\"],"
    " \"coefficients\": [{\"index\": 2, \"terms\": [{\"c\": [-1, 0], \"e\": [1]}]}]}";

int main(void) {
  CHECK(critmono_version() != NULL);
  CHECK(strlen(critmono_version()) > 0);

  critmono_config cfg = critmono_default_config();
  CHECK(cfg.seed == 0);
  CHECK(cfg.tol_residual == 1e-10);
  CHECK(cfg.tol_cluster == 1e-6);
  CHECK(cfg.tol_safety == 1e-12);

  /* family lifecycle */
  critmono_family* fam = NULL;
  char* err = NULL;
  CHECK(critmono_family_parse(kSqrt, &fam, &err) == CRITMONO_OK);
  CHECK(fam != NULL);
  CHECK(err == NULL);
  CHECK(critmono_family_degree(fam) == 2);
  CHECK(critmono_family_param_count(fam) == 1);

  critmono_family* bad = NULL;
  err = NULL;
  CHECK(critmono_family_parse("{\"degree\": -1}", &bad, &err) == CRITMONO_ERR_INVALID);
  CHECK(bad == NULL);
  CHECK(err != NULL);
  critmono_free(err);

  /* closed-form bound */
  char* report = NULL;
  err = NULL;
  CHECK(critmono_bound(9, NULL, &cfg, &report, &err) == CRITMONO_OK);
  CHECK(report != NULL);
  CHECK(strstr(report, "\"s\": 4") != NULL);
  CHECK(strstr(report, "\"alternating\"") != NULL);
  critmono_free(report);

  report = NULL;
  err = NULL;
  CHECK(critmono_bound(9, "nonsense", &cfg, &report, &err) == CRITMONO_ERR_INVALID);
  CHECK(err != NULL);
  critmono_free(err);

  /* table */
  report = NULL;
  err = NULL;
  CHECK(critmono_table(&cfg, &report, &err) == CRITMONO_OK);
  CHECK(strstr(report, "tschebotarow") != NULL);
  CHECK(strstr(report, "hilbert") != NULL);
  critmono_free(report);

  /* automatic monodromy of x^2 - u */
  report = NULL;
  err = NULL;
  CHECK(critmono_monodromy(fam, "[[1, 0]]", NULL, &cfg, &report, &err) == CRITMONO_OK);
  CHECK(report != NULL);
  CHECK(strstr(report, "\"order\": 2") != NULL);
  CHECK(strstr(report, "\"transitive\": true") != NULL);
  critmono_free(report);

  report = NULL;
  err = NULL;
  CHECK(critmono_monodromy(fam, "not json", NULL, &cfg, &report, &err) == CRITMONO_ERR_INVALID);
  CHECK(err != NULL);
  critmono_free(err);

  /* inertia at the double root */
  report = NULL;
  err = NULL;
  CHECK(critmono_inertia(fam, "[[0, 0]]", 2, &cfg, &report, &err) == CRITMONO_OK);
  CHECK(strstr(report, "\"class\": [") != NULL);
  CHECK(strstr(report, "\"order\": 2") != NULL);
  critmono_free(report);

  /* vanishing test: the collapsed pair gives an exact zero */
  report = NULL;
  err = NULL;
  CHECK(critmono_phi_test(fam, "[[0, 0]]", "2", 4, NULL, "[[1, 0]]", &cfg, &report, &err) ==
        CRITMONO_OK);
  CHECK(strstr(report, "\"vanishes\": true") != NULL);
  critmono_free(report);

  report = NULL;
  err = NULL;
  CHECK(critmono_phi_test(fam, "[[0, 0]]", "3", 4, NULL, NULL, &cfg, &report, &err) ==
        CRITMONO_ERR_INVALID);
  CHECK(err != NULL);
  critmono_free(err);

  /* chain with a single critical point */
  report = NULL;
  err = NULL;
  CHECK(critmono_chain(fam, "[[[0, 0]]]", &cfg, &report, &err) == CRITMONO_OK);
  CHECK(strstr(report, "\"lower_bound\": 1") != NULL);
  critmono_free(report);

  /* transform of the family onto itself */
  report = NULL;
  err = NULL;
  CHECK(critmono_transform(fam, fam, "[[{\"c\": [1, 0], \"e\": [1]}]]", "[[1, 0]]", NULL, &cfg,
                           &report, &err) == CRITMONO_OK);
  CHECK(strstr(report, "\"transformable\": true") != NULL);
  critmono_free(report);

  critmono_family_destroy(fam);
  critmono_family_destroy(NULL); /* must be a no-op */

  if (failures) {
    fprintf(stderr, "%d C interface check(s) failed\n", failures);
    return 1;
  }
  printf("C interface checks passed\n");
  return 0;
}
