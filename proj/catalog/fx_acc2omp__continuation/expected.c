void smooth(float *restrict a, const float *restrict b, int n)
{
    #pragma omp kernels copy(a)
    for (int i = 1; i < n - 1; i++)
        a[i] = (b[i - 1] + b[i] + b[i + 1]) / 3;
}
