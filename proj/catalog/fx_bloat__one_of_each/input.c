#include <math.h>

__attribute__((target("avx512")))
double norm(const double *x, int n)
{
  double s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * x[i];
  return sqrt(s);
}

__attribute__((target("avx2")))
double norm(const double *x, int n)
{
  double s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * x[i];
  return sqrt(s);
}

__attribute__((target("default")))
double norm(const double *x, int n)
{
  double s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * x[i];
  return sqrt(s);
}

int main(void)
{
  double v[2] = {3, 4};
  return norm(v, 2) > 4.9;
}
