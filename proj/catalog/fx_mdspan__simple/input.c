double trace3(double *a, int n)
{
  double t = 0;
  for (int i = 0; i < n; i++)
    t += a[i][i][i];
  return t;
}
