#include <cstdio>

#include "aeslab/verification.hpp"

// Final gate: every release-blocking check on one line each, exit 1 on any
// failure so ctest reports the binary red.
int main() {
  int failed = 0;
  const auto results = aeslab::acceptance_checks();
  for (const aeslab::CheckResult& r : results) {
    std::puts(aeslab::format_check_line(r).c_str());
    if (!r.pass) ++failed;
  }
  std::printf("%zu checks, %d failed\n", results.size(), failed);
  return failed == 0 ? 0 : 1;
}
