void mix(double *a, double *b, int n)
{
  #pragma omp unroll partial (4)
  for (int i=0; i < n; ++i)
  {
    a[i+0] = b[i+0];
  }
}
