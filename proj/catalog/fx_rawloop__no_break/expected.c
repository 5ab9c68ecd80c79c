#include <iostream>

int count7(void)
{
  int xs[4] = {7, 1, 7, 2};
  bool seen = false;
  int c = 0;
  for (int &x : xs)
    if (x == 7)
      {
        seen = true;
        c++;
      }
  return seen ? c : 0;
}
