__attribute__((target("avx2")))
void axpy(double *y, const double *x, double a, int n)
{
  for (int i = 0; i < n; i++)
    y[i] += a * x[i];
}

__attribute__((target("default")))
void axpy(double *y, const double *x, double a, int n)
{
  for (int i = 0; i < n; i++)
    y[i] += a * x[i];
}
