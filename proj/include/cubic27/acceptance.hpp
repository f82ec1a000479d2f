#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace cubic27 {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20240601;
  int jobs = 1;
  std::vector<int> only;  // criterion ids; empty runs all
};

const std::vector<std::string>& criterion_names();  // index id - 1

// Runs the twelve acceptance criteria in order; `progress` is called after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& progress = {});

}  // namespace cubic27
