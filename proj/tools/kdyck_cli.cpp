// Command-line front end for libkdyck. Exit codes: 0 success, 1 verification
// failure, 2 usage or argument error.

#include <kdyck/kdyck.h>

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr long kDefaultCap = 10000;

struct StringDeleter {
  void operator()(char* s) const { kdyck_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

// exits via exception unwinding in main on failure
int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return 2;
}

int api_error(const char* what, kdyck_status status) {
  std::cerr << "error: " << what << ": " << kdyck_status_message(status) << "\n";
  return 2;
}

struct CountArgs {
  long k = 1;
  long n = 0;
  long j = 0;
  bool last_up = false;
};

struct SequenceArgs {
  std::string kind;
  long k = 1;
  long n = 0;
  long m_max = 20;
  std::string format = "plain";
  long offset = 0;
  bool no_cap = false;
};

struct VerifyArgs {
  long k_max = 3;
  long n_max = 6;
  long order = 20;
  std::string fault = "none";
};

struct UbarArgs {
  long k = 1;
  long order = 10;
  bool no_cap = false;
};

int run_count(const CountArgs& args) {
  ApiString value;
  char* raw = nullptr;
  const kdyck_status status = kdyck_count(args.k, args.n, args.j, args.last_up ? 1 : 0, &raw);
  value.reset(raw);
  if (status != KDYCK_OK) return api_error("count", status);
  std::cout << value.get() << "\n";
  return 0;
}

int run_sequence(const SequenceArgs& args) {
  kdyck_sequence_kind kind;
  bool needs_n = false;
  if (args.kind == "end-level-count") {
    kind = KDYCK_SEQ_END_LEVEL_COUNT;
    needs_n = true;
  } else if (args.kind == "last-downrun-total") {
    kind = KDYCK_SEQ_LAST_DOWNRUN_TOTAL;
  } else if (args.kind == "early-adventure") {
    kind = KDYCK_SEQ_EARLY_ADVENTURE;
  } else if (args.kind == "fuss-catalan") {
    kind = KDYCK_SEQ_FUSS_CATALAN;
  } else if (args.kind == "ubar-coefficients") {
    kind = KDYCK_SEQ_UBAR_COEFFICIENTS;
  } else {
    return fail_usage("unknown --kind '" + args.kind + "'");
  }
  if (args.format != "plain" && args.format != "csv" && args.format != "bfile")
    return fail_usage("unknown --format '" + args.format + "'");
  if (!args.no_cap && args.m_max > kDefaultCap)
    return fail_usage("--m-max exceeds the cap of " + std::to_string(kDefaultCap) +
                      " (pass --unsafe-no-cap to override)");
  if (needs_n && args.n < 0) return fail_usage("--kind end-level-count requires --n >= 0");

  kdyck_sequence* seq = nullptr;
  kdyck_status status = kdyck_sequence_open(kind, args.k, args.n, &seq);
  if (status != KDYCK_OK) return api_error("sequence", status);
  for (long m = 0; m <= args.m_max; ++m) {
    char* raw = nullptr;
    status = kdyck_sequence_term(seq, m, &raw);
    ApiString value(raw);
    if (status != KDYCK_OK) {
      kdyck_sequence_close(seq);
      return api_error("sequence", status);
    }
    if (args.format == "plain")
      std::cout << value.get() << "\n";
    else if (args.format == "csv")
      std::cout << m << "," << value.get() << "\n";
    else
      std::cout << args.offset + m << " " << value.get() << "\n";
  }
  kdyck_sequence_close(seq);
  return 0;
}

int run_verify(const VerifyArgs& args) {
  kdyck_fault fault;
  if (args.fault == "none")
    fault = KDYCK_FAULT_NONE;
  else if (args.fault == "generalized-binomial")
    fault = KDYCK_FAULT_GENERALIZED_BINOMIAL;
  else if (args.fault == "shifted-count")
    fault = KDYCK_FAULT_SHIFTED_COUNT;
  else if (args.fault == "dropped-term")
    fault = KDYCK_FAULT_DROPPED_TERM;
  else
    return fail_usage("unknown --inject-fault '" + args.fault + "'");

  kdyck_verify_report* report = nullptr;
  const kdyck_status status = kdyck_verify_run(args.k_max, args.n_max, args.order, fault, &report);
  if (status != KDYCK_OK) return api_error("verify", status);

  const size_t suites = kdyck_verify_report_suite_count(report);
  size_t passed = 0;
  for (size_t i = 0; i < suites; ++i) {
    const bool ok = kdyck_verify_report_suite_passed(report, i) != 0;
    passed += ok ? 1 : 0;
    std::cout << (ok ? "PASS  " : "FAIL  ") << kdyck_verify_report_suite_name(report, i);
    const char* detail = kdyck_verify_report_suite_detail(report, i);
    if (!ok && detail != nullptr && detail[0] != '\0') std::cout << "  " << detail;
    std::cout << "\n";
  }
  std::cout << passed << "/" << suites << " suites passed\n";
  const bool all = kdyck_verify_report_all_passed(report) != 0;
  kdyck_verify_report_free(report);
  return all ? 0 : 1;
}

int run_ubar(const UbarArgs& args) {
  if (!args.no_cap && args.order > kDefaultCap)
    return fail_usage("--order exceeds the cap of " + std::to_string(kDefaultCap) +
                      " (pass --unsafe-no-cap to override)");
  for (long ell = 0; ell <= args.order; ++ell) {
    char* raw = nullptr;
    const kdyck_status status = kdyck_fuss_catalan(args.k, ell, &raw);
    ApiString value(raw);
    if (status != KDYCK_OK) return api_error("ubar", status);
    std::cout << value.get() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration of k-Dyck paths (up-steps (1,k), down-steps (1,-1))"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count paths with a given number of up-steps and end level");
  count->add_option("--k", count_args.k, "Up-step rise k")->required()->check(CLI::PositiveNumber);
  count->add_option("--n", count_args.n, "Number of up-steps")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--j", count_args.j, "End level")->required()->check(CLI::NonNegativeNumber);
  count->add_flag("--last-up", count_args.last_up, "Require the final step to be an up-step");

  SequenceArgs seq_args;
  auto* sequence = app.add_subcommand("sequence", "Emit a sequence family for m = 0..m-max");
  sequence
      ->add_option("--kind", seq_args.kind,
                   "One of: end-level-count, last-downrun-total, early-adventure, fuss-catalan, "
                   "ubar-coefficients")
      ->required();
  sequence->add_option("--k", seq_args.k, "Up-step rise k")->required()->check(CLI::PositiveNumber);
  sequence->add_option("--n", seq_args.n, "Number of up-steps (end-level-count only)")
      ->check(CLI::NonNegativeNumber);
  sequence->add_option("--m-max", seq_args.m_max, "Last index to emit")->check(CLI::NonNegativeNumber);
  sequence->add_option("--format", seq_args.format, "plain, csv, or bfile");
  sequence->add_option("--offset", seq_args.offset, "Index of the first b-file line")
      ->check(CLI::NonNegativeNumber);
  sequence->add_flag("--unsafe-no-cap", seq_args.no_cap, "Lift the m-max cap");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Cross-check every route and identity; exit 1 on mismatch");
  verify->add_option("--k-max", verify_args.k_max, "Largest k to sweep")->check(CLI::Range(1L, 6L));
  verify->add_option("--n-max", verify_args.n_max, "Largest up-step count to sweep")->check(CLI::Range(1L, 10L));
  verify->add_option("--order", verify_args.order, "Series truncation order")->check(CLI::Range(1L, 200L));
  verify->add_option("--inject-fault", verify_args.fault,
                     "Self-test: run with a deliberately broken formula route (none, "
                     "generalized-binomial, shifted-count, dropped-term)");

  UbarArgs ubar_args;
  auto* ubar = app.add_subcommand("ubar", "Print the kernel-root coefficients for z^0..z^order");
  ubar->add_option("--k", ubar_args.k, "Up-step rise k")->required()->check(CLI::PositiveNumber);
  ubar->add_option("--order", ubar_args.order, "Last coefficient to print")->check(CLI::NonNegativeNumber);
  ubar->add_flag("--unsafe-no-cap", ubar_args.no_cap, "Lift the order cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (count->parsed()) return run_count(count_args);
  if (sequence->parsed()) return run_sequence(seq_args);
  if (verify->parsed()) return run_verify(verify_args);
  if (ubar->parsed()) return run_ubar(ubar_args);
  return 2;
}
