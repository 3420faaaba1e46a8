#include "bfk/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

// Usage: acceptance [id ...]
int main(int argc, char** argv) {
  std::vector<int> ids;
  for (int i = 1; i < argc; ++i) ids.push_back(std::atoi(argv[i]));
  if (ids.empty()) ids = bfk::acceptance_ids();
  int failed = 0;
  for (int id : ids) {
    const int one[] = {id};
    const auto r = bfk::run_acceptance(one).at(0);
    std::printf("%s\n", bfk::format_result(r).c_str());
    std::fflush(stdout);
    failed += r.passed ? 0 : 1;
  }
  std::printf("%d criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
