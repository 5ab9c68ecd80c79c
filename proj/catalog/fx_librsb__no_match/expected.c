int rsb__BCSR_spmv_sasa_double_complex_C__tN_r1_c1_uu_sH_dE_uX(int n)
{
  return n;
}

int rsb__BCSR_spmv_sasa_float_complex_C__tN_r1_c1_uu_sH_dE_uG(int n)
{
  return -n;
}
