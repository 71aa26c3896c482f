#include "closed_formulas.hpp"

#include <stdexcept>

#include "combinatorics.hpp"
#include "kernel.hpp"

namespace kdyck {

BigInt dm_core(int k, long n, long j) {
  require_k(k);
  BigInt total = 0;
  for (long m = 0; k * m <= j; ++m) {
    const BigInt term = binomial(j - k * m, m) * fuss_catalan(k, n - m);
    if (m % 2 == 0)
      total += term;
    else
      total -= term;
  }
  const BigInt tail = binomial(j - 1 - k * n, n);
  if (n % 2 == 0)
    total -= tail;
  else
    total += tail;
  return total;
}

BigInt dm_count(int k, long n, long j) { return dm_core(k, n - 1, j - k); }

BigInt last_downrun_total(int k, long m) {
  require_k(k);
  if (m < 0) return 0;
  return fuss_catalan(k, m + 1) - fuss_catalan(k, m);
}

BigInt early_adventure_total(int k, long m) {
  require_k(k);
  if (m < 0) throw std::invalid_argument("early_adventure_total: m must be >= 0");
  if (m == 0) return k;
  BigInt q, rem;
  const BigInt num = k * binomial((static_cast<long>(k) + 1) * m, m);
  mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(m + 1));
  if (rem != 0) throw std::logic_error("early_adventure_total: division not exact");
  return q;
}

ZSeries early_adventure_series(int k, long order) {
  require_k(k);
  if (order < 0) throw std::invalid_argument("early_adventure_series: negative order");
  const ZSeries ubar = ubar_series(k, order);
  ZSeries total(order);
  ZSeries power = ZSeries::one(order);
  for (int h = 1; h <= k; ++h) {
    power = power * ubar;
    total = total + power;
  }
  return total;
}

}  // namespace kdyck
