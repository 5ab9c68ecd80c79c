void saxpy(float *y, const float *x, float a, int n)
{
#pragma acc kernels
  for (int i = 0; i < n; i++)
    y[i] += a * x[i];
}
