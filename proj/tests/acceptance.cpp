// Acceptance suite: every criterion is exact (integer equality); the two
// timing bounds are wall-clock. One PASS/FAIL line per criterion; the exit
// code is the number of failed criteria.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "closed_formulas.hpp"
#include "combinatorics.hpp"
#include "kernel.hpp"
#include "path_oracle.hpp"
#include "slice_engine.hpp"
#include "subprocess.hpp"

using namespace kdyck;

namespace {

int failures = 0;

void report(int number, const std::string& title, bool ok, const std::string& detail = "") {
  std::cout << "criterion " << number << " (" << title << "): " << (ok ? "PASS" : "FAIL");
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// 1. formula == slice engine == DP, plus exhaustive enumeration at tiny scale
void criterion_three_routes() {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 1; k <= 4 && ok; ++k) {
    const auto slices = generate_F(k, 7);
    for (long n = 1; n <= 8 && ok; ++n) {
      std::vector<BigInt> listed;
      const bool tiny = (k + 1) * n <= 20;
      if (tiny) {
        listed.assign(static_cast<std::size_t>(k * n) + 1, 0);
        enumerate_paths(k, n, [&](const std::string& p) {
          long level = 0, last_up_level = 0;
          for (char step : p) {
            level += step == 'U' ? k : -1;
            if (step == 'U') last_up_level = level;
          }
          listed[static_cast<std::size_t>(last_up_level)] += 1;
        });
      }
      for (long j = 0; j <= k * n && ok; ++j) {
        const BigInt formula = dm_count(k, n, j);
        const BigInt& slice = slices[static_cast<std::size_t>(n - 1)].coeff(n, j);
        const BigInt dp = count_paths(k, n, j, true);
        ok = formula == slice && slice == dp && (!tiny || listed[static_cast<std::size_t>(j)] == dp);
        if (!ok) detail << "k=" << k << " n=" << n << " j=" << j;
      }
    }
  }
  report(1, "three-route equivalence", ok, detail.str());
}

// 2. kernel root from both constructions through z^40; factorization z^20 u^6
void criterion_kernel() {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 1; k <= 5 && ok; ++k) {
    if (!kernel_check(k, 40).ok) {
      ok = false;
      detail << "kernel residual k=" << k;
    } else if (!ubar_series(k, 40).agreement(ubar_fixed_point(k, 40)).equal) {
      ok = false;
      detail << "ubar construction mismatch k=" << k;
    }
  }
  for (int k = 1; k <= 4 && ok; ++k) {
    const auto r = kernel_factorization_check(k, 6, 20);
    if (!r.ok) {
      ok = false;
      detail << "factorization k=" << k << " u^" << r.failing_u << " z^" << r.failing_z;
    }
  }
  report(2, "kernel identities", ok, detail.str());
}

// 3. S_j closed == recursive for j <= 60; sum S_j u^j inverts the kernel
void criterion_denominators() {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 1; k <= 5 && ok; ++k)
    for (long j = 0; j <= 60 && ok; ++j) {
      if (s_polynomial(k, j) == s_polynomial_recursive(k, j)) continue;
      ok = false;
      detail << "S mismatch k=" << k << " j=" << j;
    }
  const long J = 60;
  for (int k = 1; k <= 5 && ok; ++k) {
    std::vector<ZPoly> s;
    for (long j = 0; j <= J; ++j) s.push_back(s_polynomial(k, j));
    for (long t = 0; t <= J - (k + 1) && ok; ++t) {
      ZPoly c = s[static_cast<std::size_t>(t)];
      if (t >= 1) c -= s[static_cast<std::size_t>(t - 1)];
      if (t >= k + 1) c += s[static_cast<std::size_t>(t - k - 1)].shifted(1);
      const bool term_ok = t == 0 ? c == ZPoly::one() : c.is_zero();
      if (!term_ok) {
        ok = false;
        detail << "inverse fails k=" << k << " u^" << t;
      }
    }
  }
  report(3, "denominator coefficients", ok, detail.str());
}

// 4. terminal down-run totals, four ways, plus two derived spot values
void criterion_last_downrun() {
  std::ostringstream detail;
  bool ok = last_downrun_total(1, 2) == 3 && last_downrun_total(2, 1) == 2;
  if (!ok) detail << "spot values";
  for (int k = 1; k <= 4 && ok; ++k)
    for (long m = 1; m <= 8 && ok; ++m) {
      const BigInt closed = last_downrun_total(k, m);
      BigInt weighted = 0;
      for (long j = 0; j <= k * m; ++j) weighted += j * dm_count(k, m, j);
      ok = closed == fuss_catalan(k, m + 1) - fuss_catalan(k, m) && closed == weighted &&
           closed == last_downrun_total_oracle(k, m) &&
           ((k + 1) * m > 20 || closed == last_downrun_total_exhaustive(k, m));
      if (!ok) detail << "k=" << k << " m=" << m;
    }
  report(4, "last down-run totals", ok, detail.str());
}

// 5. first down-run totals against the oracle and the series coefficients
void criterion_early_adventure() {
  std::ostringstream detail;
  bool ok = early_adventure_total(1, 1) == 1 && early_adventure_total(2, 1) == 3;
  if (!ok) detail << "spot values";
  for (int k = 1; k <= 4 && ok; ++k) {
    for (long m = 0; m <= 7 && ok; ++m) {
      ok = early_adventure_total(k, m) == first_downrun_total_oracle(k, m);
      if (!ok) detail << "oracle k=" << k << " m=" << m;
    }
    const ZSeries series = early_adventure_series(k, 12);
    for (long m = 0; m <= 12 && ok; ++m) {
      ok = series.coeff(m) == early_adventure_total(k, m);
      if (!ok) detail << "series k=" << k << " m=" << m;
    }
  }
  report(5, "early-adventure totals", ok, detail.str());
}

// 6. level-h returns equal the kernel-root form
void criterion_level_h() {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 1; k <= 4 && ok; ++k) {
    const ZSeries ubar = ubar_series(k, 8);
    for (long h = 0; h <= k && ok; ++h) {
      ZSeries expected = ubar.pow(h + 1) - ubar.pow(h);
      if (h == 0) expected = expected + ZSeries::one(8);
      for (long m = 0; m <= 8 && ok; ++m) {
        ok = paths_from_level(k, h, m) == expected.coeff(m);
        if (!ok) detail << "k=" << k << " h=" << h << " m=" << m;
      }
    }
  }
  report(6, "level-h return counts", ok, detail.str());
}

// 7. row sums
void criterion_row_sums() {
  std::ostringstream detail;
  bool ok = true;
  for (int k = 1; k <= 4 && ok; ++k)
    for (long n = 1; n <= 8 && ok; ++n) {
      BigInt row = 0;
      for (long j = 0; j <= k * n; ++j) row += dm_count(k, n, j);
      ok = row == fuss_catalan(k, n);
      if (!ok) detail << "k=" << k << " n=" << n;
    }
  report(7, "row sums", ok, detail.str());
}

// 8. O(j)-term evaluation at scale, consistency via the row-sum identity
void criterion_efficiency() {
  std::ostringstream detail;
  auto start = std::chrono::steady_clock::now();
  const BigInt big = dm_count(3, 2000, 3000);
  const double single = seconds_since(start);
  bool ok = single < 5.0 && big > 0;
  if (!ok) detail << "single cell took " << single << "s";

  if (ok) {
    start = std::chrono::steady_clock::now();
    BigInt row = 0;
    for (long j = 0; j <= 600; ++j) row += dm_count(3, 200, j);
    const double full_row = seconds_since(start);
    ok = full_row < 60.0 && row == fuss_catalan(3, 200);
    if (!ok) detail << "row n=200 took " << full_row << "s, match=" << (row == fuss_catalan(3, 200));
  }
  report(8, "efficiency", ok, detail.str());
}

// 9. CLI verify: exit 0 stock, exit 1 under each injected fault
void criterion_cli_contract() {
  std::ostringstream detail;
  const std::string cli = KDYCK_CLI_PATH;
  auto stock = testutil::run_command(cli + " verify --k-max 3 --n-max 6 --order 20 2>/dev/null");
  bool ok = stock.exit_code == 0;
  if (!ok) detail << "stock verify exited " << stock.exit_code;
  for (const char* fault : {"generalized-binomial", "shifted-count", "dropped-term"}) {
    if (!ok) break;
    auto run = testutil::run_command(cli + " verify --k-max 2 --n-max 4 --order 12 --inject-fault " +
                                     fault + " 2>/dev/null");
    ok = run.exit_code == 1 && run.output.find("counterexample") != std::string::npos;
    if (!ok) detail << fault << " exited " << run.exit_code;
  }
  report(9, "CLI verification contract", ok, detail.str());
}

}  // namespace

int main() {
  criterion_three_routes();
  criterion_kernel();
  criterion_denominators();
  criterion_last_downrun();
  criterion_early_adventure();
  criterion_level_h();
  criterion_row_sums();
  criterion_efficiency();
  criterion_cli_contract();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures;
}
