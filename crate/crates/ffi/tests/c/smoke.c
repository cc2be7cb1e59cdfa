/* Copyright 2026 The pairdecomp Authors. SPDX-License-Identifier: Apache-2.0 */
#include <stdio.h>
#include <string.h>

#include "pairdecomp.h"

int main(void) {
  PdRational d[3] = {{12, 1}, {-10, 1}, {13, 1}};
  PdVector *v = NULL, *st = NULL, *cyc = NULL;
  if (pd_vector_new(3, d, 3, &v) != PD_STATUS_OK) return 1;
  if (pd_vector_decompose(v, &st, &cyc) != PD_STATUS_OK) return 2;
  PdRational x;
  if (pd_vector_value(cyc, 0, 1, &x) != PD_STATUS_OK) return 3;
  if (x.numer != 35 || x.denom != 3) return 4;
  if (pd_vector_value(v, 0, 0, &x) != PD_STATUS_INDEX) return 5;
  if (strlen(pd_last_error_message()) == 0) return 6;
  pd_vector_free(st);
  pd_vector_free(cyc);
  pd_vector_free(v);

  PdGraph *g = NULL;
  if (pd_graph_parse("asym 3\n1 2 1\n1 3 2\n2 3 3\n", &g) != PD_STATUS_OK) return 7;
  uintptr_t tour[3];
  if (pd_graph_circuit(g, PD_METHOD_EXACT, true, tour, 3, &x) != PD_STATUS_OK) return 8;
  pd_graph_free(g);
  printf("%lld/%lld\n", (long long)x.numer, (long long)x.denom);
  return 0;
}
