#include <math.h>

double norm(const double *x, int n)
{
  double s = 0;
#pragma omp parallel for reduction(+:s)
  for (int i = 0; i < n; i++)
    s += x[i] * x[i];
#pragma omp parallel
  {
    s = sqrt(s);
  }
  return s;
}
