// Runs the full verification sweep and prints one line per criterion.
// Exit status 0 iff every criterion passed.

#include "hypermat/acceptance.hpp"

#include <iostream>

int main() {
  const auto results = hypermat::run_acceptance(3, 6, &std::cerr);
  std::cout << hypermat::acceptance_report(results);
  return hypermat::all_passed(results) ? 0 : 1;
}
