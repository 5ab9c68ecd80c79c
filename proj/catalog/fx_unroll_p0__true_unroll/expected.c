void clear4(char *buf, int n)
{
  #pragma omp unroll partial (4)
  for (int i=0; i < n; ++i)
  {
    buf[i+0] = 0;
  }
}
