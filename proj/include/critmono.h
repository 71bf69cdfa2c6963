/* C interface of the critmono library.
 *
 * Every computation returns a JSON report string allocated by the library;
 * release it (and error messages) with critmono_free. Status codes match the
 * CLI exit codes: 0 success, 2 invalid input, 3 numerical failure.
 */
#ifndef CRITMONO_H
#define CRITMONO_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  CRITMONO_OK = 0,
  CRITMONO_ERR_INVALID = 2,
  CRITMONO_ERR_NUMERIC = 3
} critmono_status;

typedef struct critmono_family critmono_family;

typedef struct {
  uint64_t seed;
  double tol_residual;
  double tol_cluster;
  double tol_safety;
} critmono_config;

/* Library defaults: seed 0, residual 1e-10, cluster 1e-6, safety 1e-12. */
critmono_config critmono_default_config(void);

const char* critmono_version(void);

/* Frees any string returned through a char** out-parameter. */
void critmono_free(char* p);

/* Parses the family JSON format:
 *   {"degree":n, "parameters":["u1",...],
 *    "coefficients":[{"index":1,"terms":[{"c":[re,im],"e":[e1,...]}]},...]}
 * where index i holds the coefficient of x^(n-i) of the monic polynomial. */
critmono_status critmono_family_parse(const char* json_text, critmono_family** out,
                                      char** errmsg);
void critmono_family_destroy(critmono_family* fam);
int critmono_family_degree(const critmono_family* fam);
int critmono_family_param_count(const critmono_family* fam);

/* Longest strictly increasing class chain for degree n; kind is "alternating"
 * or "symmetric" (NULL means alternating). */
critmono_status critmono_bound(int n, const char* kind, const critmono_config* cfg,
                               char** report_json, char** errmsg);

/* Comparison table of the computed lower bounds for n = 5..9 against the
 * literature values. */
critmono_status critmono_table(const critmono_config* cfg, char** report_json, char** errmsg);

/* Monodromy group at the basepoint. loops_json carries the loop list; pass
 * NULL to derive loops automatically from a seeded generic line. */
critmono_status critmono_monodromy(const critmono_family* fam, const char* basepoint_json,
                                   const char* loops_json, const critmono_config* cfg,
                                   char** report_json, char** errmsg);

/* Inertia group at a critical point from `probes` random small circles
 * (0 selects the default of 8). */
critmono_status critmono_inertia(const critmono_family* fam, const char* point_json, int probes,
                                 const critmono_config* cfg, char** report_json, char** errmsg);

/* Vanishing test of the constrained linear-form product for the class given
 * as text ("3,1,1"). samples 0 selects the default of 8. blocks_json may fix
 * the symbol layout; basepoint_json may fix the labeling basepoint; both may
 * be NULL. */
critmono_status critmono_phi_test(const critmono_family* fam, const char* point_json,
                                  const char* class_text, int samples, const char* blocks_json,
                                  const char* basepoint_json, const critmono_config* cfg,
                                  char** report_json, char** errmsg);

/* Chain certificate across the given points (lowest pattern first). */
critmono_status critmono_chain(const critmono_family* fam, const char* points_json,
                               const critmono_config* cfg, char** report_json, char** errmsg);

/* Transformability verdict between two families along the parameter map. */
critmono_status critmono_transform(const critmono_family* from_fam,
                                   const critmono_family* to_fam, const char* pmap_json,
                                   const char* basepoint_json, const char* loops_json,
                                   const critmono_config* cfg, char** report_json,
                                   char** errmsg);

#ifdef __cplusplus
}
#endif

#endif /* CRITMONO_H */
