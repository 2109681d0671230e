// Acceptance runner: one line per check, nonzero exit if anything fails.
#include "tilt3/verify.hpp"

#include <chrono>
#include <cstdio>

int main() {
  auto start = std::chrono::steady_clock::now();
  auto checks = tilt3::run_verification();
  int failures = 0;
  int index = 0;
  for (const auto& c : checks) {
    ++index;
    std::printf("%s  %2d %s (%s)\n", c.pass ? "PASS" : "FAIL", index,
                c.name.c_str(), c.detail.c_str());
    if (!c.pass) ++failures;
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::printf("%d/%zu checks passed in %lld ms\n", int(checks.size()) - failures,
              checks.size(), static_cast<long long>(elapsed));
  return failures == 0 ? 0 : 1;
}
