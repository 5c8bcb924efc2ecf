#pragma once

// Report documents shared by the command-line tool and the regression suite.
// A report carries a command echo, a digest of the input algebra, a version
// stamp and a result payload. Rendering is deterministic: the same inputs
// give byte-identical text or JSON regardless of thread count.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lieobstruct/ce_complex.hpp"
#include "lieobstruct/lie_algebra.hpp"

namespace lieobstruct {

std::string version();

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(std::string_view bytes);
/// "fnv1a64:" followed by 16 hex digits of the canonical serialization.
std::string algebra_digest(const BracketAlgebra& algebra);

enum class ReportFormat { Text, Json };

struct Report {
  std::string command;
  std::string input_digest;  // empty when the command has no input algebra
  std::vector<std::string> notices;
  nlohmann::ordered_json result = nlohmann::ordered_json::object();
  /// 0 success, 1 negative verdict.
  int exit_code = 0;
};

std::string render(const Report& report, ReportFormat format);

Report cohomology_report(const LieAlgebra& algebra, Coefficients coeffs, unsigned threads = 1);
/// Lifting one level up; exit_code 1 when obstructed.
Report obstruction_report(const LieAlgebra& algebra);
/// exit_code 1 when obstructed.
Report lifts_report(const LieAlgebra& algebra);
/// Residue algebra lifted toward target_level; exit_code 1 when a step is obstructed.
Report tower_report(const LieAlgebra& residue, unsigned target_level);
Report structure_report(const LieAlgebra& algebra);

struct RegressionCheck {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Fixed checks on psl3 over F_3 and on which catalog algebras lift.
std::vector<RegressionCheck> regression_checks();
/// exit_code 1 when any check fails.
Report regression_report();

}  // namespace lieobstruct
