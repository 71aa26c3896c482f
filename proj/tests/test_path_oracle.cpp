#include <doctest.h>

#include <set>

#include "combinatorics.hpp"
#include "path_oracle.hpp"
#include "slice_engine.hpp"

using namespace kdyck;

namespace {

// Test-only recount: recursively generates every step sequence with exactly
// n_up up-steps and the end-level-determined number of down-steps, fully
// independent of the DP.
BigInt brute_prefix_count(int k, long n_up, long end_level, bool require_last_up) {
  const long downs = k * n_up - end_level;
  if (downs < 0 || end_level < 0) return 0;
  BigInt found = 0;
  auto rec = [&](auto&& self, long level, long ups, long dns, char last) -> void {
    if (ups == n_up && dns == downs) {
      if (level == end_level && (!require_last_up || last == 'U')) found += 1;
      return;
    }
    if (ups < n_up) self(self, level + k, ups + 1, dns, 'U');
    if (dns < downs && level > 0) self(self, level - 1, ups, dns + 1, 'D');
  };
  rec(rec, 0, 0, 0, ' ');
  return found;
}

}  // namespace

TEST_CASE("count_paths examples") {
  CHECK(count_paths(1, 3, 1, true) == 2);   // UUDDU, UDUDU
  CHECK(count_paths(1, 1, 1, true) == 1);   // U
  CHECK(count_paths(2, 2, 0, false) == 3);  // UUDDDD, UDUDDD, UDDUDD
  CHECK(count_paths({1, 3, 1, true}) == 2);
}

TEST_CASE("an up-step of rise k cannot land below level k") {
  // levels 0 < j < k are unreachable with a final up-step
  CHECK(count_paths(2, 2, 1, true) == 0);
  CHECK(count_paths(2, 2, 2, true) == 1);  // UDDU
  CHECK(count_paths(3, 2, 2, true) == 0);
}

TEST_CASE("count_paths medium values") {
  CHECK(count_paths(2, 5, 4, false) == 163);
  CHECK(count_paths(1, 4, 2, false) == 9);
}

TEST_CASE("count_paths edge cases") {
  CHECK(count_paths(1, 0, 0, false) == 1);  // empty path
  CHECK(count_paths(1, 0, 0, true) == 0);   // empty path has no last step
  CHECK(count_paths(1, 2, 5, false) == 0);  // level above k*n
  CHECK(count_paths(1, -1, 0, false) == 0);
}

TEST_CASE("DP agrees with brute-force generation") {
  for (int k = 1; k <= 3; ++k)
    for (long n = 0; n <= 5; ++n)
      for (long j = 0; j <= k * n + 1; ++j)
        for (bool last_up : {false, true})
          CHECK(count_paths(k, n, j, last_up) == brute_prefix_count(k, n, j, last_up));
}

TEST_CASE("enumerate_paths lists complete paths in lexicographic order") {
  CHECK(enumerate_paths(1, 2) == std::vector<std::string>{"UUDD", "UDUD"});
  CHECK(enumerate_paths(1, 0) == std::vector<std::string>{""});
  CHECK(enumerate_paths(2, 2).size() == 3);
  CHECK(enumerate_paths(1, 5).size() == 42);
  CHECK(enumerate_paths(2, 4).size() == 55);
  CHECK(enumerate_paths(3, 3).size() == 22);

  // lexicographic with U < D, no duplicates
  const auto paths = enumerate_paths(2, 3);
  std::set<std::string> unique(paths.begin(), paths.end());
  CHECK(unique.size() == paths.size());
  for (std::size_t i = 1; i < paths.size(); ++i) {
    std::string prev = paths[i - 1], cur = paths[i];
    for (auto* p : {&prev, &cur})
      for (auto& ch : *p) ch = ch == 'U' ? 'A' : 'B';  // make U sort before D
    CHECK(prev < cur);
  }
}

TEST_CASE("enumerate_paths refuses oversized requests") {
  CHECK_THROWS_AS(enumerate_paths(2, 11), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_paths(1, 16), std::invalid_argument);
}

TEST_CASE("every complete path splits as up-ending prefix plus final descent") {
  for (int k = 1; k <= 4; ++k)
    for (long n = 1; n <= 8; ++n) {
      BigInt total = 0;
      for (long j = 0; j <= k * n; ++j) total += count_paths(k, n, j, true);
      CHECK(total == fuss_catalan(k, n));
    }
}

TEST_CASE("last down-run totals: weighting equals literal measurement") {
  CHECK(last_downrun_total_oracle(1, 1) == 1);
  CHECK(last_downrun_total_oracle(1, 2) == 3);  // UU from level 2, UDU from level 1
  CHECK(last_downrun_total_oracle(2, 1) == 2);
  for (int k = 1; k <= 3; ++k)
    for (long m = 0; (k + 1) * m <= 20; ++m)
      CHECK(last_downrun_total_oracle(k, m) == last_downrun_total_exhaustive(k, m));
}

TEST_CASE("paths_from_level examples") {
  CHECK(paths_from_level(2, 0, 0) == 1);  // empty path
  CHECK(paths_from_level(1, 1, 0) == 0);
  CHECK(paths_from_level(1, 0, 2) == 2);  // Catalan
  CHECK(paths_from_level(2, 1, 1) == 1);  // up to 3, down-run of 3
  // starts deeper than k are still well-defined
  CHECK(paths_from_level(3, 7, 1) == 1);  // up to 10, down-run of 10
  CHECK(paths_from_level(1, 3, 1) == 1);
  CHECK(paths_from_level(1, 3, 3) == 20);
  CHECK(paths_from_level(2, 5, 2) == 8);
  CHECK(paths_from_level(1, 2, 2) == 4);
}

TEST_CASE("paths_from_level matches the slice engine") {
  for (int k = 1; k <= 4; ++k)
    for (long h = 0; h <= k; ++h) {
      const ZSeries series = h_coeffs_by_slices(k, h, 8);
      for (long m = 0; m <= 8; ++m) CHECK(paths_from_level(k, h, m) == series.coeff(m));
    }
}

TEST_CASE("first down-run totals: DP equals literal measurement") {
  CHECK(first_downrun_total_oracle(1, 1) == 1);   // UUDD: 0, UDUD: 1
  CHECK(first_downrun_total_oracle(2, 1) == 3);   // 0 + 1 + 2
  CHECK(first_downrun_total_oracle(2, 0) == 2);   // forced UDD
  for (int k = 1; k <= 3; ++k)
    for (long m = 0; (k + 1) * (m + 1) <= 20; ++m)
      CHECK(first_downrun_total_oracle(k, m) == first_downrun_total_exhaustive(k, m));
}

TEST_CASE("oracle outputs are nonnegative") {
  for (int k = 1; k <= 3; ++k)
    for (long m = 0; m <= 6; ++m) {
      CHECK(last_downrun_total_oracle(k, m) >= 0);
      CHECK(first_downrun_total_oracle(k, m) >= 0);
      for (long j = 0; j <= k * m; ++j) CHECK(count_paths(k, m, j, true) >= 0);
    }
}

TEST_CASE("stat ledger aggregates rows consistently") {
  const StatLedger ledger = tabulate_last_up_counts(2, 6);
  CHECK(ledger.counts.size() == 7);
  for (long n = 1; n <= 6; ++n) {
    CHECK(ledger.row_totals[static_cast<std::size_t>(n)] == fuss_catalan(2, n));
    CHECK(ledger.weighted_totals[static_cast<std::size_t>(n)] == last_downrun_total_oracle(2, n));
    BigInt row = 0;
    for (const BigInt& c : ledger.counts[static_cast<std::size_t>(n)]) {
      CHECK(c >= 0);
      row += c;
    }
    CHECK(row == ledger.row_totals[static_cast<std::size_t>(n)]);
  }
}
