#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "rhocalc_tools/acceptance.hpp"

int main(int argc, char** argv) {
  using namespace rhocalc::tools;
  unsigned jobs = 1;
  if (argc > 1) jobs = static_cast<unsigned>(std::max(1, std::atoi(argv[1])));
  std::vector<int> ids;
  for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  int failures = 0;
  for (int id : ids) {
    const auto result = run_criterion(id, jobs);
    std::cout << summary_line(result) << std::endl;
    if (!result.passed) {
      ++failures;
      std::cout << "  detail: " << result.detail.dump() << std::endl;
    }
  }
  std::cout << (kCriterionCount - failures) << "/" << kCriterionCount << " criteria passed" << std::endl;
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
