#pragma once

#include <optional>
#include <string>
#include <vector>

namespace kdyck {

// Deliberately wrong formula routes the sweep can be asked to run instead of
// the real one. Each is a historical bug class the cross-checks exist to
// catch; a healthy sweep must go red under every one of them.
enum class Fault {
  none,
  // binomial with a negative upper index evaluated as the generalized
  // (falling-factorial) binomial instead of 0
  generalized_binomial,
  // end-level count read without the z u^k index shift
  shifted_count,
  // second term of the end-level formula dropped
  dropped_term,
};

std::optional<Fault> fault_from_name(const std::string& name);
const char* fault_name(Fault fault);

struct SuiteResult {
  std::string name;
  bool passed;
  std::string detail;  // first counterexample on failure, empty otherwise
};

struct VerifyReport {
  int k_max;
  long n_max;
  long order;
  Fault fault;
  std::vector<SuiteResult> suites;
  bool all_passed() const;
};

inline constexpr int kVerifyMaxK = 6;
inline constexpr long kVerifyMaxN = 10;
inline constexpr long kVerifyMaxOrder = 200;

// Runs every cross-route suite: closed formulas against the slice engine and
// the path oracles, the kernel and factorization identities, the denominator
// recursion, and the telescoping totals. Deterministic output order.
VerifyReport run_verification(int k_max, long n_max, long order, Fault fault = Fault::none);

}  // namespace kdyck
