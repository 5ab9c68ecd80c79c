__global__ void axpy(float a, const float *x, float *y, int n);

void run(float a, const float *x, float *y, int n, cudaStream_t s)
{
  hipLaunchKernelGGL(axpy,(n + 255) / 256,256,0,s,a, x, y, n);
  cudaStreamSynchronize(s);
}
