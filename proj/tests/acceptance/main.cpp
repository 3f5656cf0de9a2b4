// One line per acceptance criterion; tolerances live in the verify suites.
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>

#include "qei_verify/suites.hpp"

int main(int argc, char** argv) {
  qei::verify::Options opts;
  std::string suite = "all";
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--suite" && i + 1 < argc) suite = argv[++i];
    else if (a == "--no-diagnostics") opts.diagnostics = false;
    else {
      std::cerr << "usage: qei_acceptance [--suite NAME] [--no-diagnostics]\n";
      return 2;
    }
  }
  if (!qei::verify::is_known_suite(suite)) {
    std::cerr << "unknown suite " << suite << "\n";
    return 2;
  }
  const auto checks = qei::verify::run_suite(suite, opts);
  int failed = 0;
  for (const auto& c : checks) {
    std::cout << qei::verify::format_line(c) << "\n";
    failed += !c.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? EXIT_FAILURE : EXIT_SUCCESS;
}
