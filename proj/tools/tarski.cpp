#include <iostream>

int main() {
  std::cout << "tarski: placeholder\n";
  return 1;
}
