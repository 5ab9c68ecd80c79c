#include <Kokkos_Core.hpp>
#include <cmath>

void roots(double *x, int n)
{
  for (int m = 0; m < n; m++) {
    x[m] = std::sqrt(x[m]);
  }
}
