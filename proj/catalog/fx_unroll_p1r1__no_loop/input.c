void copy(double *a, const double *b, int n)
{
  for (int i = 0; i < n; ++i)
    a[i] = b[i];
}
