#include <iostream>
#include <algorithm>
#include <functional>

int main()
{
  int data[4] = {3, 5, 7, 9};
  std::cout << "searching" << std::endl;
  const bool has7 =
    (find(begin(data),end(data),7) !=
     end(data));
  return has7 ? 0 : 1;
}
