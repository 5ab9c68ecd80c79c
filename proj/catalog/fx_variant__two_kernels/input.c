void scale_kernel(float *v, float a, int n)
{
  for (int i = 0; i < n; i++)
    v[i] *= a;
}

float sum_kernel(const float *v, int n)
{
  float s = 0;
  for (int i = 0; i < n; i++)
    s += v[i];
  return s;
}
