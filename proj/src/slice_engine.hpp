#pragma once

#include <vector>

#include "bivariate.hpp"
#include "zseries.hpp"

namespace kdyck {

// The two slice shapes. A path is grown one slice at a time while u tracks
// the level reached and z counts up-steps.
enum class SliceVariant {
  // a run of down-steps followed by one up-step; u^j -> z * sum_{h=0..j} u^{h+k}
  down_run_then_up,
  // one up-step followed by a run of down-steps; u^i -> z * sum_{h=0..i+k} u^h
  up_then_down_run,
};

// Immutable iteration state. The paper's section on returns overloads one
// letter for both the iterate index and the starting level; they are kept
// apart here as slice_index and start_level.
struct SliceState {
  int k;
  SliceVariant variant;
  long start_level;  // meaningful for up_then_down_run only
  long slice_index;  // slices applied so far
  BivariatePoly poly;
};

// F_0 = z u^k: the first up-step, treated separately.
SliceState make_down_run_state(int k);

// F_0 = u^start_level for the up-then-down-run iteration.
SliceState make_up_run_state(int k, long start_level);

// Applies one slice substitution and returns the successor state.
SliceState slice_step(const SliceState& state);

// [F_0, ..., F_m_max] for the down-run-then-up iteration. The coefficient of
// z^n u^j in the sum over m counts k-Dyck paths with n up-steps that end at
// level j with a final up-step. Each F_m is homogeneous of z-degree m+1, so
// that coefficient lives in F_{n-1} alone.
std::vector<BivariatePoly> generate_F(int k, long m_max);

// Runs the up-then-down-run iteration from level start_level and extracts
// the u^0 coefficient after each slice: the z^m coefficient of the result
// counts paths from start_level down to 0 built from exactly m slices.
ZSeries h_coeffs_by_slices(int k, long start_level, long m_max);

}  // namespace kdyck
