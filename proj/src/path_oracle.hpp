#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bigint.hpp"

namespace kdyck {

// Ground-truth counting, independent of every generating-function route.
// Paths are step sequences over {'U','D'} with up = (1,k), down = (1,-1),
// starting at level 0 and never dipping below it.

struct PathSpec {
  int k;
  long n_up;            // number of up-steps
  long end_level;
  bool require_last_up; // when false, any final step (the down-steps after
                        // the last up-step are free; the length is whatever
                        // the end level dictates)
};

// Dynamic program over (up-steps used, level, last-step type).
BigInt count_paths(const PathSpec& spec);
BigInt count_paths(int k, long n_up, long end_level, bool require_last_up);

// Exhaustive enumeration of complete paths (all (k+1)*n_up steps, ending on
// the axis), in lexicographic step order with 'U' before 'D'. Refused when
// (k+1)*n_up exceeds the step limit.
inline constexpr long kEnumerationStepLimit = 30;
void enumerate_paths(int k, long n_up, const std::function<void(const std::string&)>& visit);
std::vector<std::string> enumerate_paths(int k, long n_up);

// Total length of the terminal down-run over complete paths with m up-steps,
// computed as sum_j j * count_paths(k, m, j, last step up): a complete path
// splits uniquely into an up-ending prefix at level j plus j down-steps.
BigInt last_downrun_total_oracle(int k, long m);
// The same total measured literally on enumerated paths (guard applies).
BigInt last_downrun_total_exhaustive(int k, long m);

// Paths from start_level down to 0 made of exactly `slices` slices, each an
// up-step followed by a possibly empty down-run, never below level 0.
BigInt paths_from_level(int k, long start_level, long slices);

// Total length of the down-run immediately after the first up-step, over
// complete paths with m+1 up-steps: sum_{i=0..k} i * paths_from_level(k, k-i, m).
BigInt first_downrun_total_oracle(int k, long m);
// Literal measurement on enumerated paths with m+1 up-steps (guard applies).
BigInt first_downrun_total_exhaustive(int k, long m);

// Aggregated DP results for n_up = 0..n_max: end-level counts with the
// last step required up, their row totals and end-level-weighted totals.
struct StatLedger {
  int k = 1;
  long n_max = 0;
  std::vector<std::vector<BigInt>> counts;  // counts[n][j], j in [0, k*n]
  std::vector<BigInt> row_totals;           // sum_j counts[n][j]
  std::vector<BigInt> weighted_totals;      // sum_j j * counts[n][j]
};
StatLedger tabulate_last_up_counts(int k, long n_max);

}  // namespace kdyck
