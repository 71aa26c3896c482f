#include "kdyck/kdyck.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>

#include "closed_formulas.hpp"
#include "combinatorics.hpp"
#include "path_oracle.hpp"
#include "verify.hpp"

namespace {

// DP route guard: the table is O(n * k * n) big integers.
constexpr long kMaxDpUpSteps = 100000;
constexpr long kMaxDpCells = 20000000;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kdyck_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument&) {
    return KDYCK_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    return KDYCK_ERR_INTERNAL;
  } catch (const std::exception&) {
    return KDYCK_ERR_INTERNAL;
  }
}

kdyck_status emit(const kdyck::BigInt& value, char** out) {
  *out = dup_string(kdyck::to_decimal(value));
  return KDYCK_OK;
}

bool valid_k(long k) { return k >= 1 && k <= 1000000; }

}  // namespace

struct kdyck_sequence {
  kdyck_sequence_kind kind;
  int k;
  long n_up;
};

struct kdyck_verify_report {
  kdyck::VerifyReport report;
};

extern "C" {

const char* kdyck_status_message(kdyck_status status) {
  switch (status) {
    case KDYCK_OK: return "ok";
    case KDYCK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KDYCK_ERR_LIMIT_EXCEEDED: return "request exceeds guard limits";
    case KDYCK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* kdyck_version(void) { return "1.0.0"; }

void kdyck_free(char* s) { std::free(s); }

kdyck_status kdyck_count(long k, long n_up, long end_level, int last_step_up, char** out_decimal) {
  if (out_decimal == nullptr || !valid_k(k)) return KDYCK_ERR_INVALID_ARGUMENT;
  if (last_step_up == 0 && (n_up > kMaxDpUpSteps || (n_up > 0 && k * n_up > kMaxDpCells / n_up)))
    return KDYCK_ERR_LIMIT_EXCEEDED;
  return guarded([&] {
    const kdyck::BigInt value = last_step_up != 0
                                    ? kdyck::dm_count(static_cast<int>(k), n_up, end_level)
                                    : kdyck::count_paths(static_cast<int>(k), n_up, end_level, false);
    return emit(value, out_decimal);
  });
}

kdyck_status kdyck_fuss_catalan(long k, long ell, char** out_decimal) {
  if (out_decimal == nullptr || !valid_k(k)) return KDYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] { return emit(kdyck::fuss_catalan(static_cast<int>(k), ell), out_decimal); });
}

kdyck_status kdyck_last_downrun_total(long k, long m, char** out_decimal) {
  if (out_decimal == nullptr || !valid_k(k)) return KDYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] { return emit(kdyck::last_downrun_total(static_cast<int>(k), m), out_decimal); });
}

kdyck_status kdyck_early_adventure_total(long k, long m, char** out_decimal) {
  if (out_decimal == nullptr || !valid_k(k) || m < 0) return KDYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] { return emit(kdyck::early_adventure_total(static_cast<int>(k), m), out_decimal); });
}

kdyck_status kdyck_sequence_open(kdyck_sequence_kind kind, long k, long n_up, kdyck_sequence** out) {
  if (out == nullptr || !valid_k(k)) return KDYCK_ERR_INVALID_ARGUMENT;
  switch (kind) {
    case KDYCK_SEQ_END_LEVEL_COUNT:
      if (n_up < 0) return KDYCK_ERR_INVALID_ARGUMENT;
      break;
    case KDYCK_SEQ_LAST_DOWNRUN_TOTAL:
    case KDYCK_SEQ_EARLY_ADVENTURE:
    case KDYCK_SEQ_FUSS_CATALAN:
    case KDYCK_SEQ_UBAR_COEFFICIENTS:
      break;
    default:
      return KDYCK_ERR_INVALID_ARGUMENT;
  }
  *out = new (std::nothrow) kdyck_sequence{kind, static_cast<int>(k), n_up};
  return *out != nullptr ? KDYCK_OK : KDYCK_ERR_INTERNAL;
}

kdyck_status kdyck_sequence_term(const kdyck_sequence* seq, long index, char** out_decimal) {
  if (seq == nullptr || out_decimal == nullptr || index < 0) return KDYCK_ERR_INVALID_ARGUMENT;
  return guarded([&] {
    kdyck::BigInt value;
    switch (seq->kind) {
      case KDYCK_SEQ_END_LEVEL_COUNT:
        value = kdyck::dm_count(seq->k, seq->n_up, index);
        break;
      case KDYCK_SEQ_LAST_DOWNRUN_TOTAL:
        value = kdyck::last_downrun_total(seq->k, index);
        break;
      case KDYCK_SEQ_EARLY_ADVENTURE:
        value = kdyck::early_adventure_total(seq->k, index);
        break;
      case KDYCK_SEQ_FUSS_CATALAN:
      case KDYCK_SEQ_UBAR_COEFFICIENTS:
        value = kdyck::fuss_catalan(seq->k, index);
        break;
    }
    return emit(value, out_decimal);
  });
}

void kdyck_sequence_close(kdyck_sequence* seq) { delete seq; }

kdyck_status kdyck_verify_run(long k_max, long n_max, long order, kdyck_fault fault,
                              kdyck_verify_report** out) {
  if (out == nullptr) return KDYCK_ERR_INVALID_ARGUMENT;
  if (k_max < 1 || k_max > kdyck::kVerifyMaxK || n_max < 1 || n_max > kdyck::kVerifyMaxN || order < 1 ||
      order > kdyck::kVerifyMaxOrder)
    return KDYCK_ERR_LIMIT_EXCEEDED;
  kdyck::Fault mapped;
  switch (fault) {
    case KDYCK_FAULT_NONE: mapped = kdyck::Fault::none; break;
    case KDYCK_FAULT_GENERALIZED_BINOMIAL: mapped = kdyck::Fault::generalized_binomial; break;
    case KDYCK_FAULT_SHIFTED_COUNT: mapped = kdyck::Fault::shifted_count; break;
    case KDYCK_FAULT_DROPPED_TERM: mapped = kdyck::Fault::dropped_term; break;
    default: return KDYCK_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    auto* report = new kdyck_verify_report{
        kdyck::run_verification(static_cast<int>(k_max), n_max, order, mapped)};
    *out = report;
    return KDYCK_OK;
  });
}

int kdyck_verify_report_all_passed(const kdyck_verify_report* report) {
  return report != nullptr && report->report.all_passed() ? 1 : 0;
}

size_t kdyck_verify_report_suite_count(const kdyck_verify_report* report) {
  return report != nullptr ? report->report.suites.size() : 0;
}

const char* kdyck_verify_report_suite_name(const kdyck_verify_report* report, size_t index) {
  if (report == nullptr || index >= report->report.suites.size()) return nullptr;
  return report->report.suites[index].name.c_str();
}

int kdyck_verify_report_suite_passed(const kdyck_verify_report* report, size_t index) {
  if (report == nullptr || index >= report->report.suites.size()) return 0;
  return report->report.suites[index].passed ? 1 : 0;
}

const char* kdyck_verify_report_suite_detail(const kdyck_verify_report* report, size_t index) {
  if (report == nullptr || index >= report->report.suites.size()) return nullptr;
  return report->report.suites[index].detail.c_str();
}

void kdyck_verify_report_free(kdyck_verify_report* report) { delete report; }

}  // extern "C"
