int f(int);

void update(double *a, double *b, int i, int j, int k)
{
  a[f(i), j+1, k*2] = b[i][j][k];
  b[0][0][0] = a[i - 1, (j), k] * 0.5;
}
