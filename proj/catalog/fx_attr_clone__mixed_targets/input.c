__attribute__((target("sse4.2", "avx512", "fma")))
float dot(const float *x, const float *y, int n)
{
  float s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}

__attribute__((target("avx2", "fma")))
float dot(const float *x, const float *y, int n)
{
  float s = 0;
  for (int i = 0; i < n; i++)
    s += x[i] * y[i];
  return s;
}

__attribute__((target("avx512")))
void clear(float *v, int n) {
  for (int i = 0; i < n; i++) v[i] = 0;
}
