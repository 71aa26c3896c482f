#pragma once

#include "bigint.hpp"
#include "zseries.hpp"

namespace kdyck {

// Closed-form answers, each a sum of O(j) or O(1) big-integer terms.

// [z^n u^j] (ubar - u) / (1 - u + z u^{k+1}):
//   sum_{0<=m<=j/k} (-1)^m binom(j-km, m) fuss_catalan(k, n-m)
//     - (-1)^n binom(j-1-kn, n).
// Accepts any integers; out-of-support arguments give 0 through the binomial
// and Fuss-Catalan zero-conventions alone, with no branching.
BigInt dm_core(int k, long n, long j);

// Number of k-Dyck paths with n up-steps ending at level j, the last step an
// up-step. The prefactor z u^k only shifts indices, so this is
// dm_core(k, n-1, j-k): dm_core at (n, j) answers the path question at
// (n+1, j+k). The direction of that shift is pinned by the oracle-equivalence
// tests; the opposite reading fails them immediately.
BigInt dm_count(int k, long n, long j);

// Total length of the terminal down-run over complete paths with m up-steps:
// fuss_catalan(k, m+1) - fuss_catalan(k, m), the z^m coefficient of
// ubar/z - ubar - 1/z.
BigInt last_downrun_total(int k, long m);

// Total length of the down-run right after the first up-step, over complete
// paths with m+1 up-steps: k for m = 0 (single forced path), otherwise
// k/(m+1) * binom((k+1)m, m) with the division checked exact.
BigInt early_adventure_total(int k, long m);

// The same totals as a series: sum_{h=1..k} ubar^h truncated at `order`.
// Its z^m coefficient equals early_adventure_total(k, m).
ZSeries early_adventure_series(int k, long order);

}  // namespace kdyck
