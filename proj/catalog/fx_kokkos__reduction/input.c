#include <cmath>

double norm2(const double *x, int n)
{
  double result = 0;
  for (int i = 0; i < n; ++i) {
    result += x[i] * x[i];
  }
  return std::sqrt(result);
}
