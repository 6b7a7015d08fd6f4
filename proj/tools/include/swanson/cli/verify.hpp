#pragma once

#include <string>
#include <vector>

namespace swanson::cli {

enum class ExpectedSource { derived_from_operators, printed_in_paper };
enum class CheckStatus { pass, fail, paper_discrepancy };

// upper: pass when residual <= tolerance. lower: pass when residual > tolerance
// (used for effects that must be visible, e.g. a non-constant standard norm).
enum class Bound { upper, lower };

const char* to_string(ExpectedSource s) noexcept;
const char* to_string(CheckStatus s) noexcept;
const char* to_string(Bound b) noexcept;
ExpectedSource expected_source_from_string(const std::string& s);
CheckStatus check_status_from_string(const std::string& s);
Bound bound_from_string(const std::string& s);

struct Check {
  std::string name;
  double computed = 0.0;
  double expected = 0.0;
  ExpectedSource source = ExpectedSource::derived_from_operators;
  double residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::upper;
  CheckStatus status = CheckStatus::pass;
  std::string note;
};

struct VerificationReport {
  double gamma = 0.0;
  std::vector<Check> checks;

  int count(CheckStatus s) const;
  bool has_failures() const { return count(CheckStatus::fail) > 0; }
  const Check* find(const std::string& name) const;
};

// Runs every derived-from-operators check and evaluates the printed formulas
// against them. A printed formula that disagrees is a paper_discrepancy only
// while all derived checks pass; otherwise it is reported as fail.
VerificationReport run_verification(double gamma);

}  // namespace swanson::cli
