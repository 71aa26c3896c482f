#include "slice_engine.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "combinatorics.hpp"

namespace kdyck {

namespace {

// Both substitutions send u^j to z * (u^lo + ... + u^{j+k}); only the low end
// differs (lo = k for down-run-then-up, lo = 0 for up-then-down-run). Row t of
// the image therefore collects every source row j >= t - k, which a suffix
// sum delivers in one sweep.
BivariatePoly apply_substitution(const BivariatePoly& poly, int k, long lo) {
  BivariatePoly out;
  if (poly.is_zero()) return out;
  const long ud = poly.u_degree();
  std::vector<ZPoly> suffix(static_cast<std::size_t>(ud) + 1);
  suffix[static_cast<std::size_t>(ud)] = poly.u_coeff(ud);
  for (long j = ud - 1; j >= 0; --j)
    suffix[static_cast<std::size_t>(j)] = suffix[static_cast<std::size_t>(j + 1)] + poly.u_coeff(j);
  for (long t = lo; t <= ud + k; ++t) {
    const long j0 = std::max(t - k, 0L);
    out += BivariatePoly::from_u_monomial(suffix[static_cast<std::size_t>(j0)].shifted(1), t);
  }
  return out;
}

}  // namespace

SliceState make_down_run_state(int k) {
  require_k(k);
  return {k, SliceVariant::down_run_then_up, 0, 0, BivariatePoly::monomial(1, 1, k)};
}

SliceState make_up_run_state(int k, long start_level) {
  require_k(k);
  if (start_level < 0) throw std::invalid_argument("start_level must be >= 0");
  return {k, SliceVariant::up_then_down_run, start_level, 0, BivariatePoly::monomial(1, 0, start_level)};
}

SliceState slice_step(const SliceState& state) {
  const long lo = state.variant == SliceVariant::down_run_then_up ? state.k : 0;
  SliceState next = state;
  next.poly = apply_substitution(state.poly, state.k, lo);
  next.slice_index = state.slice_index + 1;
  return next;
}

std::vector<BivariatePoly> generate_F(int k, long m_max) {
  require_k(k);
  if (m_max < 0) throw std::invalid_argument("generate_F: m_max must be >= 0");
  std::vector<BivariatePoly> out;
  out.reserve(static_cast<std::size_t>(m_max) + 1);
  SliceState state = make_down_run_state(k);
  out.push_back(state.poly);
  for (long m = 0; m < m_max; ++m) {
    state = slice_step(state);
    out.push_back(state.poly);
  }
  return out;
}

ZSeries h_coeffs_by_slices(int k, long start_level, long m_max) {
  require_k(k);
  if (m_max < 0) throw std::invalid_argument("h_coeffs_by_slices: m_max must be >= 0");
  std::vector<BigInt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(m_max) + 1);
  SliceState state = make_up_run_state(k, start_level);
  for (long m = 0; m <= m_max; ++m) {
    // after m slices every monomial carries z^m exactly
    coeffs.push_back(state.poly.coeff(m, 0));
    if (m < m_max) state = slice_step(state);
  }
  return ZSeries(std::move(coeffs), m_max);
}

}  // namespace kdyck
