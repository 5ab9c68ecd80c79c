#include <string.h>

__attribute__((target("avx2")))
void copy(char *d, const char *s, int n)
{
  memcpy(d, s, n);
}

__attribute__((target("default")))
void copy(char *d, const char *s, int n)
{
  memcpy(d, s, n);
}

__attribute__((target("sse4.2")))
int first(const char *s)
{
  return s[0];
}

void untouched(void)
{
}
