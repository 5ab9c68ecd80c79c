void smooth(float *restrict a, const float *restrict b, int n)
{
    #pragma acc parallel loop \
        copyin(b[0:n]) \
        copyout(a[0:n])
    for (int i = 1; i < n - 1; i++)
        a[i] = (b[i - 1] + b[i] + b[i + 1]) / 3;
}
