#include <cuda_fp16.h>

__global__ void half_copy(const float *in, int n)
{
  __half h;
  float f;
  h = __float2half(in[0]);
  f = __half2float(h);
}
