#pragma once

#include <string>
#include <vector>

#include "oscrep/reps.hpp"

namespace oscrep::suite {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Options {
  int threads = 1;
};

/// Parameter grid cell: a full spec plus a deterministic display name.
struct GridCell {
  RepSpec spec;
  std::string name;
};

/// The full verification grid: sl ranks 2..4 with the standard swap-set and
/// frequency choices, sp ranks 1..2 with every normalized swap shape and the
/// admissible frequency, crossed with c in {1/2, 3, -1, -2}.
std::vector<GridCell> verification_grid();
/// Grid restricted to c = 1/2, zero frequency (the closure sweep).
std::vector<GridCell> closure_grid();
/// Grid restricted to zero frequency (the weight sweep).
std::vector<GridCell> weight_grid();

CriterionResult run_bracket_grid(const Options& opts);        // 1
CriterionResult run_table_cross_checks(const Options& opts);  // 2
CriterionResult run_identity_suite(const Options& opts);      // 3
CriterionResult run_series_suite(const Options& opts);        // 4
CriterionResult run_closure_suite(const Options& opts);       // 5
CriterionResult run_weight_suite(const Options& opts);        // 6
CriterionResult run_slice_suite(const Options& opts);         // 7
CriterionResult run_determinism_suite(const Options& opts);   // 8

std::vector<CriterionResult> run_all(const Options& opts);

/// Thread cap from OSCREP_THREADS (>= 1); defaults to 1 when unset.
int threads_from_env();

}  // namespace oscrep::suite
