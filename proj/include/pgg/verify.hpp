#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgg {

// One row of the acceptance battery: a numbered end-to-end check over seeded
// instance families, with a compact summary of what was measured.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Short names for the twelve checks, indexed 1..12 (slot 0 is empty).
const std::vector<std::string>& criterion_names();

// Runs the requested criteria (all twelve when `ids` is empty) and returns
// one row per criterion in ascending order. Ids outside 1..12 throw. When
// `progress` is set, one line is streamed there as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids,
                                            std::ostream* progress = nullptr);

}  // namespace pgg
