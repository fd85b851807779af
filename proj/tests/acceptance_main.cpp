// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <cstdio>
#include <cstring>

#include "hypwalk/acceptance.hpp"

int main(int argc, char** argv) {
  hypwalk::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
  }
  int failed = 0;
  hypwalk::run_acceptance(opt, [&](const hypwalk::CriterionResult& r) {
    std::printf("%s\n", r.line().c_str());
    std::fflush(stdout);
    failed += !r.pass;
  });
  std::printf("%d of %d criteria passed\n", hypwalk::kCriteria - failed, hypwalk::kCriteria);
  return failed == 0 ? 0 : 1;
}
