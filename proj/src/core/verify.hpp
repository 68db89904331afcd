#ifndef CIRCLELAB_VERIFY_HPP
#define CIRCLELAB_VERIFY_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cl::verify {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_all();

// Prints one PASS/FAIL line per criterion; returns the number of failures.
int run_and_print(std::ostream& os);

}  // namespace cl::verify

#endif
