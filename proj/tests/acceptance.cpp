// Benchmark acceptance suite: runs every check with fixed seeds and exact
// tolerances and prints one pass/fail line per criterion.
#include <iostream>

#include "quivrep/suite.hpp"

int main(int argc, char** argv) {
  quivrep::SuiteConfig config;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--tamper") config.tamper_catalog = true;
    if (arg == "--seed" && i + 1 < argc) config.seed = std::stoull(argv[++i]);
  }
  const quivrep::ReportDoc report = quivrep::run_benchmark_suite(config);
  std::cout << report.to_text();
  return report.exit_code();
}
