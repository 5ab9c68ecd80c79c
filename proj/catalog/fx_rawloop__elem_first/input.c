#include <iostream>

int main()
{
  int data[4] = {3, 5, 7, 9};
  bool has7 = false;
  std::cout << "searching" << std::endl;
  for (int &v : data)
    if (v == 7)
      {
        std::cout << "found" << std::endl;
        has7 = true;
        break;
      }
  return has7 ? 0 : 1;
}
