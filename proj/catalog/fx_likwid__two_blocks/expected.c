#include <stdio.h>
#include <omp.h>
#include <likwid-marker.h>

void scale(double *x, int n)
{
#pragma omp parallel
  {
    LIKWID_MARKER_START(__func__);
    int t = omp_get_thread_num();
    x[t] *= 2.0;
    LIKWID_MARKER_STOP(__func__);
  }
}

void shift(double *x, int n)
{
  #pragma omp parallel
  {
    LIKWID_MARKER_START(__func__);
    for (int i = 0; i < n; i++)
      x[i] += 1.0;
    LIKWID_MARKER_STOP(__func__);
  }
}
