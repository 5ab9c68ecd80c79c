__attribute__((target("avx512")))
void axpy(double *y, const double *x, double a, int n)
{
  for (int i = 0; i < n; i++)
    y[i] += a * x[i];
}
