#include <curand_kernel.h>

__global__ void noise(double *x, int n, curandState *st)
{
  int i = blockIdx.x * blockDim.x + threadIdx.x;
  if (i < n)
    x[i] = curand_uniform_double(&st[i]);
}
