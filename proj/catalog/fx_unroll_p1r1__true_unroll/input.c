void clear4(char *buf, int n)
{
  for (int i=0; i+4-1 < n; i+=4)
  {
    buf[i+0] = 0;
    buf[i+1] = 0;
    buf[i+2] = 0;
    buf[i+3] = 0;
  }
}
