#include <cstdio>
#include <cstdlib>

#include "cubic27/acceptance.hpp"

int main(int argc, char** argv) {
  cubic27::AcceptanceOptions opts;
  for (int i = 1; i < argc; ++i) opts.only.push_back(std::atoi(argv[i]));
  int failed = 0;
  cubic27::run_acceptance(opts, [&](const cubic27::CriterionResult& r) {
    failed += !r.pass;
    std::printf("AC%-2d %s  %-32s %6.1fs  %s\n", r.id, r.pass ? "PASS" : "FAIL", r.name.c_str(), r.seconds, r.detail.c_str());
    std::fflush(stdout);
  });
  return failed == 0 ? 0 : 1;
}
