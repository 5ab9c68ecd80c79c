#include <complex.h>

int rsb__BCSR_spmv_sasa_double_complex_C__tN_r1_c1_uu_sH_dE_uG(const double complex *VA, int n)
{
  int i;
  for (i = 0; i < n; ++i)
    (void)VA[i];
  return 0;
}

int rsb__other(int n)
{
  return n;
}
