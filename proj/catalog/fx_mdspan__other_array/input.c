void copy3(double *a, double *b, int i, int j, int k)
{
  b[i][j][k] = a[i][j];
}
