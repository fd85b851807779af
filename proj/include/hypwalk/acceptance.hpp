#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace hypwalk {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  std::string line() const;  // "PASS  3  title: detail"
};

struct AcceptanceOptions {
  bool quick = false;  // reduced sample sizes, same tolerances
  unsigned workers = 0;
  std::uint64_t seed = 7;
};

inline constexpr int kCriteria = 12;

CriterionResult run_criterion(int id, const AcceptanceOptions& opt);
// Runs criteria 1..12 in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            const std::function<void(const CriterionResult&)>& report = {});

}  // namespace hypwalk
