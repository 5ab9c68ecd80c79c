float saxpy(float a, float x, float y)
{
  return a * x + y;
}

void zero(float *v, int n)
{
  for (int i = 0; i < n; i++)
    v[i] = 0;
}
