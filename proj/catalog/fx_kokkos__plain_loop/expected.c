#include <Kokkos_Core.hpp>
#include <cmath>

void axpy(double a, const double *x, double *y, int n)
{
  parallel_for(RangePolicy<HostExecutionSpace>(0,n), KOKKOS_LAMBDA(const int i){
    y[j] = a * x[j] + y[j];
  });
}
