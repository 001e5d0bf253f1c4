// Acceptance suite runner: every spec criterion, one pass/fail line each.
// --criterion N runs a single criterion (exit 77 when it is skipped);
// --level quick|full and --long control the bundled run.

#include <cstdlib>
#include <cstring>
#include <iostream>
#include <string>

#include "hankel/verify.hpp"

int main(int argc, char** argv) {
  int criterion = 0;
  bool long_runs = std::getenv("HANKEL_LONG") != nullptr;
  hankel::VerifyLevel level = hankel::VerifyLevel::full;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      criterion = std::atoi(argv[++i]);
    } else if (a == "--level" && i + 1 < argc) {
      level = std::string(argv[++i]) == "quick" ? hankel::VerifyLevel::quick
                                                : hankel::VerifyLevel::full;
    } else if (a == "--long") {
      long_runs = true;
    } else {
      std::cerr << "usage: acceptance [--criterion N] [--level quick|full] [--long]\n";
      return 2;
    }
  }

  if (criterion > 0) {
    hankel::CriterionResult r = hankel::run_criterion(criterion, long_runs);
    hankel::print_result(std::cout, r);
    if (r.skipped) return 77;
    return r.pass ? 0 : 1;
  }

  auto results = hankel::run_acceptance(level, long_runs, std::cout);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.pass && !r.skipped) ++failed;
  }
  std::cout << (failed == 0 ? "acceptance: all criteria passed"
                            : "acceptance: " + std::to_string(failed) + " FAILED")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
