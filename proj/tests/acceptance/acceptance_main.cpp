#include <cstdlib>
#include <cstring>
#include <iostream>

#include "lieweyl/acceptance.hpp"

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::strcmp(argv[1], "-v") == 0;
  int failed = 0;
  for (const auto& c : lieweyl::acceptance_criteria()) {
    auto r = lieweyl::run_criterion(c);
    std::cout << lieweyl::format_result_line(r) << std::endl;
    if (!r.pass || verbose)
      for (const auto& d : r.details) std::cout << "    " << d << '\n';
    if (!r.pass) ++failed;
  }
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " failed" : std::string("acceptance: all passed"))
            << std::endl;
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
