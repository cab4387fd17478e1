#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ampoly::cli {

struct VerificationReport {
  std::string identity_id;
  std::vector<std::string> sample_points;
  std::vector<double> residuals;
  double tolerance = 0.0;
  bool passed = false;
  double runtime_ms = 0.0;

  double max_residual() const;
};

enum class Suite {
  gf,
  corollary41,
  remark41,
  appendixA,
  orthonormality,
  moments,
  kernel,
  transform,
  polynomials,
  all,
};

/// Throws std::invalid_argument for an unknown name.
Suite parse_suite(std::string_view name);
const char* suite_name(Suite suite);
const std::vector<std::string>& suite_names();

/// Runs every identity of the suite. A tolerance override replaces each
/// report's own tolerance before pass/fail is decided. Numerical failures
/// propagate as ampoly::NumericalError.
std::vector<VerificationReport> run_suite(Suite suite,
                                          std::optional<double> tolerance_override = {});

}  // namespace ampoly::cli
