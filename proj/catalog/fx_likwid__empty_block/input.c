#include <omp.h>

void idle(void)
{
#pragma omp parallel
  {
  }
}
