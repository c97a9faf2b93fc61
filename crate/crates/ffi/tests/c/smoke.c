#include <stdio.h>
#include <string.h>

#include "superweyl.h"

#define CHECK(cond)                                                     \
  do {                                                                  \
    if (!(cond)) {                                                      \
      fprintf(stderr, "check failed at line %d: %s\n", __LINE__, #cond); \
      return 1;                                                         \
    }                                                                   \
  } while (0)

int main(void) {
  SwKappa *kappa = NULL;
  SwPoint *seed = NULL;
  SwPoint *other = NULL;
  SwOrbit *orbit = NULL;
  char *text = NULL;
  bool equal = false;

  CHECK(sw_kappa_parse("2", &kappa) == SW_STATUS_OK);
  CHECK(sw_point_parse("x=3;y=3", &seed) == SW_STATUS_OK);
  CHECK(sw_point_parse("y=1;x=4", &other) == SW_STATUS_OK);

  CHECK(sw_orbit(seed, kappa, 0, &orbit) == SW_STATUS_OK);
  CHECK(sw_orbit_len(orbit) == 2);
  CHECK(sw_orbit_is_complete(orbit));
  CHECK(sw_orbit_contains(orbit, other));

  CHECK(sw_are_equivalent(seed, other, kappa, &equal) == SW_STATUS_OK);
  CHECK(equal);

  CHECK(sw_invariant(SW_FAMILY_Q, seed, kappa, 1, &text) == SW_STATUS_OK);
  CHECK(strcmp(text, "15") == 0);
  sw_string_free(text);

  CHECK(sw_classify(kappa, 1, 1, &text) == SW_STATUS_OK);
  CHECK(strcmp(text, "{\"tag\":\"NonSpecial\"}") == 0);
  sw_string_free(text);

  SwKappa *zero = NULL;
  CHECK(sw_kappa_parse("0", &zero) == SW_STATUS_ZERO_KAPPA);
  CHECK(zero == NULL);
  CHECK(sw_last_error_message() != NULL);

  sw_orbit_free(orbit);
  sw_point_free(other);
  sw_point_free(seed);
  sw_kappa_free(kappa);
  printf("ok %s\n", sw_version());
  return 0;
}
