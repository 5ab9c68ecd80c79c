#include <complex.h>

static int rsb__BCSR_spmv_sasa_double_complex_H__tT_r1_c1_uu_sS_dE_uG(double complex *y, int n)
{
  y[0] = 0;
  return n;
}

static int rsb__BCSR_spmv_sasa_double_complex_C__tC_r1_c1_uu_sH_dE_uG(double complex *y, int n)
{
  y[n - 1] = 0;
  return n;
}
