// One line per criterion. Exits nonzero when a criterion fails that is not
// a documented discrepancy.

#include <affico/verify.hpp>

#include <iostream>

int main() {
  using namespace affico;
  int unexpected = 0;
  for (const auto& r : run_verify()) {
    std::cout << format_result(r) << '\n';
    if (!r.passed && !r.known_discrepancy) ++unexpected;
  }
  std::cout << (unexpected ? "acceptance: unexpected failures\n" : "acceptance: done\n");
  return unexpected ? 1 : 0;
}
