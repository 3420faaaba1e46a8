#pragma once

#include <span>
#include <string>
#include <vector>

namespace bfk {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // measured quantities against their pinned thresholds
  double seconds = 0.0;
};

// Ids 1..14.
std::vector<int> acceptance_ids();

// Runs the selected criteria (all when empty) in order. A criterion that
// throws is reported as failed with the exception text.
std::vector<CriterionResult> run_acceptance(std::span<const int> ids = {});

// "PASS [ 4] name: detail (1.2 s)"
std::string format_result(const CriterionResult& r);

}  // namespace bfk
