#include <cmath>

void axpy(double a, const double *x, double *y, int n)
{
  for (int j = 0; j < n; j++) {
    y[j] = a * x[j] + y[j];
  }
}
