#include <cstdlib>
#include <iostream>
#include <string>

#include "acceptance.hpp"

int main(int argc, char** argv) {
  hyperlc::cli::SuiteOptions opts;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--parallel") opts.parallel = true;
    if (arg == "--seed" && i + 1 < argc) opts.seed = std::strtoull(argv[++i], nullptr, 10);
  }
  int failed = 0;
  for (const auto& r : hyperlc::cli::run_acceptance(opts)) {
    std::cout << hyperlc::cli::format_result(r) << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
