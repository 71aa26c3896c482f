#pragma once

#include "bigint.hpp"
#include "zpolynomial.hpp"

namespace kdyck {

// Step geometry parameter: up-steps are (1,k), down-steps are (1,-1).
// Throws std::invalid_argument unless k >= 1.
void require_k(int k);

// Combinatorial binomial coefficient: a!/(b!(a-b)!) when 0 <= b <= a, and 0
// otherwise. In particular a negative upper index yields 0 — NOT the
// generalized binomial. The end-level count formula silently depends on this:
// its second term must vanish wherever its upper index goes negative.
BigInt binomial(long a, long b);

// Fuss-Catalan number binom(1+l(k+1), l) / (1+l(k+1)); 0 for l < 0.
// The division is checked to be exact at runtime.
BigInt fuss_catalan(int k, long ell);

// S_j = [u^j] 1/(1 - u + z u^{k+1}) as a polynomial in z, evaluated from the
// closed alternating sum over m with k*m <= j.
ZPoly s_polynomial(int k, long j);

// The same S_j computed purely from the recursion
//   S_j = S_{j-1} - z S_{j-k-1},   S_0 = ... = S_k = 1,
// with no reference to the closed sum.
ZPoly s_polynomial_recursive(int k, long j);

}  // namespace kdyck
