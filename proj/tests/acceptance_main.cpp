// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <iostream>

#include "core/verify.hpp"

int main() {
  int failures = cl::verify::run_and_print(std::cout);
  if (failures > 0) {
    std::cout << failures << " criteria failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
