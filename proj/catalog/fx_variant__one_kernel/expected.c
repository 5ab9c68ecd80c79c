#include <stddef.h>

double avx512_dot_kernel (const double *x, const double *y, size_t n) {
  double s = 0;
  for (size_t i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}
double avx10_dot_kernel (const double *x, const double *y, size_t n) {
  double s = 0;
  for (size_t i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}
#pragma omp declare variant(v512_f) match(device={isa{"core-avx512"}})
#pragma omp declare variant(v10_f)  match(device={isa{"core-avx10"}})
double dot_kernel(const double *x, const double *y, size_t n)
{
  double s = 0;
  for (size_t i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}

double twice(double a)
{
  return 2 * a;
}
