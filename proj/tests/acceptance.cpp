// Runs acceptance criteria 1-12 and prints one PASS/FAIL line per criterion.
// Every criterion is exact: the allowed failure count is zero.

#include <CLI11.hpp>

#include <iostream>

#include "jfa/selftest.hpp"

namespace {
constexpr std::size_t kAllowedFailures = 0;
}

int main(int argc, char** argv) {
  jfa::SelftestOptions opts;
  CLI::App app{"acceptance criteria"};
  app.add_option("--seed", opts.seed, "root seed");
  app.add_option("--corpus", opts.corpus_dir, "directory with the example machines");
  CLI11_PARSE(app, argc, argv);
  opts.level = jfa::Level::Full;

  std::vector<jfa::CriterionResult> results = jfa::run_criteria(opts);
  results.push_back(jfa::check_determinism(opts));

  std::size_t failures = 0;
  for (const auto& r : results) {
    std::cout << jfa::format_result(r) << '\n';
    failures += !r.pass;
  }
  std::cout << "acceptance: " << results.size() - failures << '/' << results.size() << " passed\n";
  return failures <= kAllowedFailures ? 0 : 1;
}
