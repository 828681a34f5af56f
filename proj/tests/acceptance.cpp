// Acceptance runner: one line per criterion, nonzero exit if any fails.

#include <cstdlib>
#include <iostream>
#include <string>

#include "xsh/acceptance.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240611;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  const auto report = xsh::run_acceptance(seed, xsh::default_threads(), &std::cerr);
  std::cout << xsh::to_text(report);
  return report.passed() ? 0 : 1;
}
