#include <iostream>
#include <algorithm>
#include <functional>

bool contains7(void)
{
  long xs[3] = {1, 7, 2};
  const bool seen =
    (find(begin(xs),end(xs),7) !=
     end(xs));
  return seen;
}
