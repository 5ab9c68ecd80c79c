int avx512_dot_kernel;

int avx512_dot_kernel_1 (const int *x, const int *y, int n) {
  int s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}
int avx10_dot_kernel (const int *x, const int *y, int n) {
  int s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}
#pragma omp declare variant(v512_f) match(device={isa{"core-avx512"}})
#pragma omp declare variant(v10_f)  match(device={isa{"core-avx10"}})
int dot_kernel(const int *x, const int *y, int n)
{
  int s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}
