void avx512_scale_kernel (float *v, float a, int n) {
  for (int i = 0; i < n; i++)
    v[i] *= a;
}
void avx10_scale_kernel (float *v, float a, int n) {
  for (int i = 0; i < n; i++)
    v[i] *= a;
}
#pragma omp declare variant(v512_f) match(device={isa{"core-avx512"}})
#pragma omp declare variant(v10_f)  match(device={isa{"core-avx10"}})
void scale_kernel(float *v, float a, int n)
{
  for (int i = 0; i < n; i++)
    v[i] *= a;
}

float avx512_sum_kernel (const float *v, int n) {
  float s = 0;
  for (int i = 0; i < n; i++)
    s += v[i];
  return s;
}
float avx10_sum_kernel (const float *v, int n) {
  float s = 0;
  for (int i = 0; i < n; i++)
    s += v[i];
  return s;
}
#pragma omp declare variant(v512_f) match(device={isa{"core-avx512"}})
#pragma omp declare variant(v10_f)  match(device={isa{"core-avx10"}})
float sum_kernel(const float *v, int n)
{
  float s = 0;
  for (int i = 0; i < n; i++)
    s += v[i];
  return s;
}
