/* The public header must compile as C. */
#include <math.h>
#include <stdio.h>

#include "localtemp/localtemp.h"

int main(void) {
  lt_ising_model* m = NULL;
  lt_report r;
  double e = 0.0;
  if (lt_ising_create_kl(1.0, 0.0, 10.0, &m) != LT_OK) return 1;
  if (lt_ising_nmin(m, 1.0, 10.0, 0.01, &r) != LT_OK || r.n_linearity != 2501) return 1;
  if (lt_ising_ground_energy(m, &e) != LT_OK || !(e < 0.0)) return 1;
  lt_ising_destroy(m);
  if (lt_erfc(1.0, NULL) != LT_ERR_NULL_POINTER) return 1;
  printf("%s\n", lt_status_string(LT_OK));
  return 0;
}
