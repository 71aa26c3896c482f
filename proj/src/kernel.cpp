#include "kernel.hpp"

#include <stdexcept>
#include <vector>

#include "combinatorics.hpp"

namespace kdyck {

ZSeries ubar_series(int k, long order) {
  require_k(k);
  if (order < 0) throw std::invalid_argument("ubar_series: negative order");
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (long ell = 0; ell <= order; ++ell) coeffs.push_back(fuss_catalan(k, ell));
  return ZSeries(std::move(coeffs), order);
}

ZSeries ubar_fixed_point(int k, long order) {
  require_k(k);
  if (order < 0) throw std::invalid_argument("ubar_fixed_point: negative order");
  ZSeries u = ZSeries::one(order);
  // each pass gets one more coefficient right; order+1 passes suffice
  for (long pass = 0; pass <= order + 1; ++pass) {
    ZSeries next = ZSeries::one(order) + u.pow(k + 1).shifted(1).truncated(order);
    if (next == u) return u;
    u = std::move(next);
  }
  throw std::logic_error("ubar_fixed_point: iteration failed to stabilize");
}

namespace {

// residual 1 - u + z u^{k+1}, known through z^order
ZSeries kernel_residual(int k, const ZSeries& u, long order) {
  return ZSeries::one(order) - u + u.pow(k + 1).shifted(1).truncated(order);
}

}  // namespace

KernelReport kernel_check(int k, long order) {
  require_k(k);
  if (order < 0) throw std::invalid_argument("kernel_check: negative order");
  const struct {
    const char* name;
    ZSeries u;
  } routes[] = {
      {"series", ubar_series(k, order)},
      {"fixed-point", ubar_fixed_point(k, order)},
  };
  for (const auto& route : routes) {
    const ZSeries residual = kernel_residual(k, route.u, order);
    for (long i = 0; i <= order; ++i) {
      if (residual.coeff(i) != 0) return {false, order, i, route.name};
    }
  }
  return {true, order, -1, ""};
}

FactorizationReport kernel_factorization_check(int k, long u_order, long z_order) {
  require_k(k);
  if (u_order < 0 || z_order < 0) throw std::invalid_argument("kernel_factorization_check: negative order");
  const ZSeries ubar = ubar_series(k, z_order);

  // polynomials in u with truncated-in-z coefficients, indexed by u-degree
  const auto zero = ZSeries(z_order);
  std::vector<ZSeries> lhs(static_cast<std::size_t>(std::max(u_order, static_cast<long>(k) + 1)) + 1, zero);
  lhs[0] = ZSeries::one(z_order);
  lhs[1] = lhs[1] - ZSeries::one(z_order);
  lhs[static_cast<std::size_t>(k) + 1] =
      lhs[static_cast<std::size_t>(k) + 1] + ZSeries::one(z_order).shifted(1).truncated(z_order);

  // first factor: ubar - u
  std::vector<ZSeries> first(2, zero);
  first[0] = ubar;
  first[1] = ZSeries::constant(-1, z_order);

  // second factor: 1 - z * sum_{i=0..k} u^i ubar^{k-i}
  std::vector<ZSeries> second(static_cast<std::size_t>(k) + 1, zero);
  for (int i = 0; i <= k; ++i) {
    ZSeries term = ubar.pow(k - i).shifted(1).truncated(z_order);
    second[static_cast<std::size_t>(i)] = -term;
  }
  second[0] = second[0] + ZSeries::one(z_order);

  std::vector<ZSeries> rhs(first.size() + second.size() - 1, zero);
  for (std::size_t i = 0; i < first.size(); ++i) {
    for (std::size_t j = 0; j < second.size(); ++j) {
      rhs[i + j] = rhs[i + j] + first[i] * second[j];
    }
  }

  for (long ud = 0; ud <= u_order; ++ud) {
    const ZSeries& l = static_cast<std::size_t>(ud) < lhs.size() ? lhs[static_cast<std::size_t>(ud)] : zero;
    const ZSeries& r = static_cast<std::size_t>(ud) < rhs.size() ? rhs[static_cast<std::size_t>(ud)] : zero;
    const auto cmp = l.agreement(r);
    if (!cmp.equal) return {false, u_order, z_order, ud, cmp.mismatch_index};
  }
  return {true, u_order, z_order, -1, -1};
}

}  // namespace kdyck
