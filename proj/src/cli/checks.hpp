#pragma once

#include <string>
#include <vector>

namespace qedsim::cli {

/// One verification sub-check. REPORTED entries are investigative: the value
/// is published, its magnitude is not gated.
struct CheckResult {
  enum class Status { pass, fail, reported };
  std::string name;
  double expected = 0.0;
  double measured = 0.0;
  double tolerance = 0.0;
  Status status = Status::pass;
  std::string note;
};

/// One acceptance criterion (a group of sub-checks).
struct CriterionResult {
  int number = 0;
  std::string title;
  std::vector<CheckResult> checks;

  bool passed() const {
    for (const CheckResult& c : checks) {
      if (c.status == CheckResult::Status::fail) return false;
    }
    return true;
  }
};

/// Criteria 1-14 (the physics/regression suite).
std::vector<CriterionResult> run_criteria_core(int workers);

/// All 15 criteria; the determinism criterion re-runs the core suite and the
/// figure renders and byte-compares them.
std::vector<CriterionResult> run_acceptance(int workers);

/// Fixed-format table of every sub-check (byte-deterministic).
std::string render_verify_table(const std::vector<CriterionResult>& criteria);

/// 0 when everything passed, 1 otherwise.
int verify_exit_code(const std::vector<CriterionResult>& criteria);

}  // namespace qedsim::cli
