#include <omp.h>
#include <likwid-marker.h>

void idle(void)
{
#pragma omp parallel
  {
    LIKWID_MARKER_START(__func__);
    LIKWID_MARKER_STOP(__func__);
  }
}
