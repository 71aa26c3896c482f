#pragma once

#include <string>

#include "zseries.hpp"

namespace kdyck {

// The power-series root ubar of the kernel equation 1 - u + z u^{k+1} = 0,
// built from its closed coefficient formula: [z^l] ubar = fuss_catalan(k, l).
ZSeries ubar_series(int k, long order);

// The same root built independently, as the fixed point of the map
// u <- 1 + z u^{k+1}, iterated to stabilization through z^order.
ZSeries ubar_fixed_point(int k, long order);

struct KernelReport {
  bool ok;
  long verified_order;
  // on failure: index of the first nonzero residual coefficient and the
  // construction ("series" or "fixed-point") it came from
  long failing_index;
  std::string route;
};

// Checks 1 - ubar + z ubar^{k+1} == 0 through z^order for ubar from BOTH
// constructions.
KernelReport kernel_check(int k, long order);

struct FactorizationReport {
  bool ok;
  long u_order;
  long z_order;
  long failing_u;
  long failing_z;
};

// Checks the factorization of the kernel polynomial
//   1 - u + z u^{k+1} == (ubar - u) * (1 - z * sum_{i=0..k} u^i ubar^{k-i})
// coefficient-wise in u and z through the given orders. The quotient
// (u^{k+1} - ubar^{k+1})/(u - ubar) enters as the telescoping sum, so no
// division happens anywhere.
FactorizationReport kernel_factorization_check(int k, long u_order, long z_order);

}  // namespace kdyck
