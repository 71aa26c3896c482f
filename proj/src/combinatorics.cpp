#include "combinatorics.hpp"

#include <deque>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kdyck {

void require_k(int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
}

BigInt binomial(long a, long b) {
  if (b < 0 || a < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  // multiplicative form: after step i the value is binom(a-b+i, i), an
  // integer, so every division is exact
  BigInt r = 1;
  for (long i = 1; i <= b; ++i) {
    r *= a - b + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

BigInt fuss_catalan(int k, long ell) {
  require_k(k);
  if (ell < 0) return 0;
  const long denom = 1 + ell * (k + 1);
  BigInt q, rem;
  const BigInt num = binomial(denom, ell);
  mpz_tdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(denom));
  if (rem != 0) throw std::logic_error("fuss_catalan: division not exact");
  return q;
}

ZPoly s_polynomial(int k, long j) {
  require_k(k);
  if (j < 0) throw std::invalid_argument("s_polynomial: j must be >= 0");
  std::vector<BigInt> coeffs;
  for (long m = 0; k * m <= j; ++m) {
    BigInt c = binomial(j - k * m, m);
    coeffs.push_back(m % 2 == 0 ? std::move(c) : BigInt(-c));
  }
  return ZPoly(std::move(coeffs));
}

ZPoly s_polynomial_recursive(int k, long j) {
  require_k(k);
  if (j < 0) throw std::invalid_argument("s_polynomial_recursive: j must be >= 0");
  if (j <= k) return ZPoly::one();
  // rolling window of the last k+2 values S_{i-k-1}..S_i
  std::deque<ZPoly> window(static_cast<std::size_t>(k) + 1, ZPoly::one());
  for (long i = k + 1; i <= j; ++i) {
    ZPoly next = window.back() - window.front().shifted(1);
    window.pop_front();
    window.push_back(std::move(next));
  }
  return window.back();
}

}  // namespace kdyck
