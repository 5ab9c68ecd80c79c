#include <iostream>

bool contains7(void)
{
  long xs[3] = {1, 7, 2};
  bool seen = false;
  for (long &x : xs)
    if (7 == x)
      {
        seen = true;
        break;
      }
  return seen;
}
