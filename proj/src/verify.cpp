#include "verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "closed_formulas.hpp"
#include "combinatorics.hpp"
#include "kernel.hpp"
#include "path_oracle.hpp"
#include "slice_engine.hpp"

namespace kdyck {

std::optional<Fault> fault_from_name(const std::string& name) {
  if (name == "none") return Fault::none;
  if (name == "generalized-binomial") return Fault::generalized_binomial;
  if (name == "shifted-count") return Fault::shifted_count;
  if (name == "dropped-term") return Fault::dropped_term;
  return std::nullopt;
}

const char* fault_name(Fault fault) {
  switch (fault) {
    case Fault::none: return "none";
    case Fault::generalized_binomial: return "generalized-binomial";
    case Fault::shifted_count: return "shifted-count";
    case Fault::dropped_term: return "dropped-term";
  }
  return "none";
}

bool VerifyReport::all_passed() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

namespace {

// Generalized binomial a(a-1)...(a-b+1)/b!, nonzero for negative a. This is
// the convention the formula must NOT use; it exists only to be injected.
BigInt binomial_generalized(long a, long b) {
  if (b < 0) return 0;
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - i + 1;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BigInt dm_core_variant(Fault fault, int k, long n, long j) {
  const bool generalized = fault == Fault::generalized_binomial;
  const auto binom = [&](long a, long b) { return generalized ? binomial_generalized(a, b) : binomial(a, b); };
  BigInt total = 0;
  for (long m = 0; k * m <= j; ++m) {
    const BigInt term = binom(j - k * m, m) * fuss_catalan(k, n - m);
    if (m % 2 == 0)
      total += term;
    else
      total -= term;
  }
  if (fault != Fault::dropped_term) {
    const BigInt tail = binom(j - 1 - k * n, n);
    if (n % 2 == 0)
      total -= tail;
    else
      total += tail;
  }
  return total;
}

// The formula route under test. Fault::none reproduces dm_count exactly.
BigInt dm_count_variant(Fault fault, int k, long n, long j) {
  if (fault == Fault::shifted_count) return dm_core_variant(fault, k, n, j);
  return dm_core_variant(fault, k, n - 1, j - k);
}

class SuiteRunner {
 public:
  SuiteRunner(int k_max, long n_max, long order, Fault fault)
      : k_max_(k_max), n_max_(n_max), order_(order), fault_(fault) {}

  VerifyReport run() {
    VerifyReport report{k_max_, n_max_, order_, fault_, {}, };
    report.suites.push_back(check_s_polynomials());
    report.suites.push_back(check_s_polynomial_inverse());
    report.suites.push_back(check_ubar_agreement());
    report.suites.push_back(check_kernel_root());
    report.suites.push_back(check_kernel_factorization());
    report.suites.push_back(check_three_route_counts());
    report.suites.push_back(check_row_sums());
    report.suites.push_back(check_last_downrun());
    report.suites.push_back(check_early_adventure());
    report.suites.push_back(check_level_h_returns());
    report.suites.push_back(check_rational_recursion());
    report.suites.push_back(check_level_floor());
    return report;
  }

 private:
  static SuiteResult pass(const char* name) { return {name, true, ""}; }
  static SuiteResult fail(const char* name, const std::string& detail) {
    return {name, false, "counterexample: " + detail};
  }

  SuiteResult check_s_polynomials() {
    const char* name = "s-poly-closed-vs-recursive";
    const long j_max = std::max(order_, 20L);
    for (int k = 1; k <= k_max_; ++k) {
      for (long j = 0; j <= j_max; ++j) {
        if (s_polynomial(k, j) == s_polynomial_recursive(k, j)) continue;
        std::ostringstream out;
        out << "k=" << k << " j=" << j << " closed=" << s_polynomial(k, j).to_string()
            << " recursive=" << s_polynomial_recursive(k, j).to_string();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  // (sum_{j<=J} S_j u^j) * (1 - u + z u^{k+1}) == 1: the u^t coefficient is
  // S_t - S_{t-1} + z S_{t-k-1}, complete for every t <= J.
  SuiteResult check_s_polynomial_inverse() {
    const char* name = "s-poly-kernel-inverse";
    const long J = std::max(order_, 20L);
    for (int k = 1; k <= k_max_; ++k) {
      std::vector<ZPoly> s;
      for (long j = 0; j <= J; ++j) s.push_back(s_polynomial(k, j));
      for (long t = 0; t <= J; ++t) {
        ZPoly c = s[static_cast<std::size_t>(t)];
        if (t >= 1) c -= s[static_cast<std::size_t>(t - 1)];
        if (t >= k + 1) c += s[static_cast<std::size_t>(t - k - 1)].shifted(1);
        const ZPoly expected = t == 0 ? ZPoly::one() : ZPoly{};
        if (c == expected) continue;
        std::ostringstream out;
        out << "k=" << k << " u-degree=" << t << " coefficient=" << c.to_string();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  SuiteResult check_ubar_agreement() {
    const char* name = "ubar-construction-agreement";
    for (int k = 1; k <= k_max_; ++k) {
      const auto cmp = ubar_series(k, order_).agreement(ubar_fixed_point(k, order_));
      if (cmp.equal) continue;
      std::ostringstream out;
      out << "k=" << k << " first mismatch at z^" << cmp.mismatch_index;
      return fail(name, out.str());
    }
    return pass(name);
  }

  SuiteResult check_kernel_root() {
    const char* name = "kernel-root";
    for (int k = 1; k <= k_max_; ++k) {
      const KernelReport r = kernel_check(k, order_);
      if (r.ok) continue;
      std::ostringstream out;
      out << "k=" << k << " residual nonzero at z^" << r.failing_index << " (" << r.route << " construction)";
      return fail(name, out.str());
    }
    return pass(name);
  }

  SuiteResult check_kernel_factorization() {
    const char* name = "kernel-factorization";
    for (int k = 1; k <= k_max_; ++k) {
      const long u_order = std::max(6L, static_cast<long>(k) + 2);
      const FactorizationReport r = kernel_factorization_check(k, u_order, order_);
      if (r.ok) continue;
      std::ostringstream out;
      out << "k=" << k << " mismatch at u^" << r.failing_u << " z^" << r.failing_z;
      return fail(name, out.str());
    }
    return pass(name);
  }

  // The sweep runs past the support on purpose: for j in (kn, (k+1)n+1] the
  // formula owes exact zeros, and only those cells expose a dropped tail term.
  SuiteResult check_three_route_counts() {
    const char* name = "three-route-counts";
    for (int k = 1; k <= k_max_; ++k) {
      const auto slices = generate_F(k, n_max_ - 1);
      for (long n = 1; n <= n_max_; ++n) {
        const bool exhaustive_scale = (static_cast<long>(k) + 1) * n <= 20;
        std::vector<BigInt> listed;
        if (exhaustive_scale) {
          listed.assign(static_cast<std::size_t>(k * n) + 2, 0);
          // complete paths split at the last up-step; the prefix count by
          // end level is the statistic all routes compute
          enumerate_paths(k, n, [&](const std::string& p) {
            long level = 0;
            long last_up_level = -1;
            for (char step : p) {
              level += step == 'U' ? k : -1;
              if (step == 'U') last_up_level = level;
            }
            listed[static_cast<std::size_t>(last_up_level)] += 1;
          });
        }
        for (long j = 0; j <= (static_cast<long>(k) + 1) * n + 1; ++j) {
          const BigInt formula = dm_count_variant(fault_, k, n, j);
          const BigInt& slice = slices[static_cast<std::size_t>(n - 1)].coeff(n, j);
          const BigInt dp = count_paths(k, n, j, true);
          const BigInt* exhaustive =
              exhaustive_scale && j < static_cast<long>(listed.size()) ? &listed[static_cast<std::size_t>(j)] : &dp;
          if (formula == slice && slice == dp && dp == *exhaustive) continue;
          std::ostringstream out;
          out << "k=" << k << " n=" << n << " j=" << j << " formula=" << formula.get_str()
              << " slice=" << slice.get_str() << " dp=" << dp.get_str()
              << " exhaustive=" << exhaustive->get_str();
          return fail(name, out.str());
        }
      }
    }
    return pass(name);
  }

  SuiteResult check_row_sums() {
    const char* name = "row-sums-fuss-catalan";
    for (int k = 1; k <= k_max_; ++k) {
      for (long n = 1; n <= n_max_; ++n) {
        BigInt row = 0;
        for (long j = 0; j <= static_cast<long>(k) * n; ++j) row += dm_count_variant(fault_, k, n, j);
        const BigInt expected = fuss_catalan(k, n);
        if (row == expected) continue;
        std::ostringstream out;
        out << "k=" << k << " n=" << n << " row sum=" << row.get_str() << " fuss-catalan=" << expected.get_str();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  SuiteResult check_last_downrun() {
    const char* name = "last-downrun-totals";
    for (int k = 1; k <= k_max_; ++k) {
      for (long m = 0; m <= n_max_; ++m) {
        const BigInt closed = last_downrun_total(k, m);
        BigInt weighted = 0;
        for (long j = 0; j <= static_cast<long>(k) * m; ++j) weighted += j * dm_count_variant(fault_, k, m, j);
        const BigInt dp = last_downrun_total_oracle(k, m);
        const BigInt exhaustive =
            (static_cast<long>(k) + 1) * m <= 20 ? last_downrun_total_exhaustive(k, m) : dp;
        if (closed == weighted && weighted == dp && dp == exhaustive) continue;
        std::ostringstream out;
        out << "k=" << k << " m=" << m << " closed=" << closed.get_str() << " weighted=" << weighted.get_str()
            << " dp=" << dp.get_str() << " exhaustive=" << exhaustive.get_str();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  SuiteResult check_early_adventure() {
    const char* name = "early-adventure-totals";
    for (int k = 1; k <= k_max_; ++k) {
      const long series_order = std::min(order_, 12L);
      const ZSeries series = early_adventure_series(k, series_order);
      for (long m = 0; m <= std::max(n_max_, series_order); ++m) {
        const BigInt closed = early_adventure_total(k, m);
        if (m <= series_order && closed != series.coeff(m)) {
          std::ostringstream out;
          out << "k=" << k << " m=" << m << " closed=" << closed.get_str()
              << " series=" << series.coeff(m).get_str();
          return fail(name, out.str());
        }
        if (m > n_max_) continue;
        const BigInt dp = first_downrun_total_oracle(k, m);
        const BigInt exhaustive =
            (static_cast<long>(k) + 1) * (m + 1) <= 20 ? first_downrun_total_exhaustive(k, m) : dp;
        if (closed == dp && dp == exhaustive) continue;
        std::ostringstream out;
        out << "k=" << k << " m=" << m << " closed=" << closed.get_str() << " dp=" << dp.get_str()
            << " exhaustive=" << exhaustive.get_str();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  SuiteResult check_level_h_returns() {
    const char* name = "level-h-returns";
    const long m_max = std::min(n_max_, 8L);
    for (int k = 1; k <= k_max_; ++k) {
      const ZSeries ubar = ubar_series(k, m_max);
      for (long h = 0; h <= k; ++h) {
        const ZSeries by_slices = h_coeffs_by_slices(k, h, m_max);
        ZSeries expected = ubar.pow(h + 1) - ubar.pow(h);
        if (h == 0) expected = expected + ZSeries::one(m_max);
        for (long m = 0; m <= m_max; ++m) {
          const BigInt dp = paths_from_level(k, h, m);
          if (by_slices.coeff(m) == expected.coeff(m) && dp == expected.coeff(m)) continue;
          std::ostringstream out;
          out << "k=" << k << " h=" << h << " m=" << m << " slices=" << by_slices.coeff(m).get_str()
              << " dp=" << dp.get_str() << " ubar-form=" << expected.coeff(m).get_str();
          return fail(name, out.str());
        }
      }
    }
    return pass(name);
  }

  // (1-u) F_{m+1} + z u^{k+1} F_m == z u^k F_m(z,1) multiplied out, the
  // rational recursion with no division
  SuiteResult check_rational_recursion() {
    const char* name = "rational-recursion";
    const long m_top = std::min(n_max_, 6L);
    for (int k = 1; k <= k_max_; ++k) {
      const auto slices = generate_F(k, m_top + 1);
      const BivariatePoly one_minus_u = BivariatePoly::monomial(1, 0, 0) - BivariatePoly::monomial(1, 0, 1);
      const BivariatePoly z_u_k1 = BivariatePoly::monomial(1, 1, static_cast<long>(k) + 1);
      for (long m = 0; m <= m_top; ++m) {
        const BivariatePoly& fm = slices[static_cast<std::size_t>(m)];
        const BivariatePoly& fm1 = slices[static_cast<std::size_t>(m + 1)];
        const BivariatePoly lhs = one_minus_u * fm1 + z_u_k1 * fm;
        const BivariatePoly rhs = BivariatePoly::from_u_monomial(fm.eval_u_one().shifted(1), k);
        if (lhs == rhs) continue;
        std::ostringstream out;
        out << "k=" << k << " m=" << m << " lhs=" << lhs.to_string() << " rhs=" << rhs.to_string();
        return fail(name, out.str());
      }
    }
    return pass(name);
  }

  SuiteResult check_level_floor() {
    const char* name = "slice-level-floor";
    for (int k = 1; k <= k_max_; ++k) {
      const auto slices = generate_F(k, std::min(n_max_, 8L));
      for (std::size_t m = 0; m < slices.size(); ++m) {
        for (long d = 0; d < k && d <= slices[m].u_degree(); ++d) {
          if (slices[m].u_coeff(d).is_zero()) continue;
          std::ostringstream out;
          out << "k=" << k << " m=" << m << " monomial below level floor at u^" << d;
          return fail(name, out.str());
        }
      }
    }
    return pass(name);
  }

  int k_max_;
  long n_max_;
  long order_;
  Fault fault_;
};

}  // namespace

VerifyReport run_verification(int k_max, long n_max, long order, Fault fault) {
  require_k(k_max);
  if (k_max > kVerifyMaxK || n_max < 1 || n_max > kVerifyMaxN || order < 1 || order > kVerifyMaxOrder) {
    throw std::invalid_argument("run_verification: bounds outside guard limits");
  }
  return SuiteRunner(k_max, n_max, order, fault).run();
}

}  // namespace kdyck
