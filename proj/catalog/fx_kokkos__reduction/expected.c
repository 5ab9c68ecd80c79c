#include <Kokkos_Core.hpp>
#include <cmath>

double norm2(const double *x, int n)
{
  double result = 0;
  parallel_reduce(RangePolicy<HostExecutionSpace>(0,n), KOKKOS_LAMBDA(const int i){
    result += x[i] * x[i];
  });
  return std::sqrt(result);
}
