#pragma once

void scale(float *y, float a, int n)
{
#pragma omp parallel for
  for (int i = 0; i < n; i++)
    y[i] *= a;
#pragma GCC ivdep
  for (int i = 0; i < n; i++)
    y[i] += 1;
}
