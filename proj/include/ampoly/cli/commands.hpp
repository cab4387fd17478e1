#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ampoly::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

enum class OutputFormat { csv, json, plain };

OutputFormat parse_format(std::string_view name);

/// Real linear combination of p_0..p_10, e.g. "p1+2*p2" or "-0.5*p3 + p0".
struct FunctionSpec {
  std::vector<std::pair<int, double>> terms;  // (degree, coefficient)

  double operator()(double x) const;
};

inline constexpr int kMaxSpecDegree = 10;

/// Throws std::invalid_argument on anything outside the grammar.
FunctionSpec parse_function_spec(std::string_view text);

/// "0.3+0i", "-1.5-2i", "0.4", "2i", "-i". Throws std::invalid_argument.
std::complex<double> parse_complex(std::string_view text);

/// Shortest decimal that round-trips, capped at 15 significant digits.
std::string format_number(double value);

/// "re+im i" with 12 significant digits, e.g. "0.06+0i".
std::string format_complex(std::complex<double> value);

/// Entry point shared by the binary and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ampoly::cli
