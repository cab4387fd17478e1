#include "ampoly/cli/commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ampoly/bargmann_transform.hpp"
#include "ampoly/cli/verification.hpp"
#include "ampoly/errors.hpp"
#include "ampoly/polynomials.hpp"

namespace ampoly::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view text) {
  std::size_t lo = 0;
  std::size_t hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  return std::string(text.substr(lo, hi - lo));
}

double parse_real(std::string_view text, const char* what) {
  const std::string s = trim(text);
  if (s.empty()) throw std::invalid_argument(std::string("empty ") + what);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw std::invalid_argument(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string s = trim(item);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v < 0) {
      throw UsageError("bad degree '" + s + "' in --n-list");
    }
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("--n-list is empty");
  return out;
}

nlohmann::json json_number(double v) {
  // JSON has no NaN or infinity
  if (!std::isfinite(v)) return nullptr;
  return v;
}

void print_reports(const std::vector<VerificationReport>& reports, OutputFormat fmt,
                   std::ostream& out) {
  switch (fmt) {
    case OutputFormat::json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) {
        arr.push_back({{"identity_id", r.identity_id},
                       {"passed", r.passed},
                       {"max_residual", json_number(r.max_residual())},
                       {"tolerance", r.tolerance}});
      }
      out << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      out << "identity_id,passed,max_residual,tolerance\n";
      for (const auto& r : reports) {
        out << r.identity_id << ',' << (r.passed ? "true" : "false") << ','
            << format_number(r.max_residual()) << ',' << format_number(r.tolerance) << '\n';
      }
      break;
    case OutputFormat::plain:
      for (const auto& r : reports) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3e < %.1e", r.max_residual(), r.tolerance);
        out << (r.passed ? "PASS " : "FAIL ") << r.identity_id << "  " << buf << "  ("
            << r.residuals.size() << " points)\n";
      }
      break;
  }
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "plain") return OutputFormat::plain;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

double FunctionSpec::operator()(double x) const {
  int top = 0;
  for (const auto& [n, c] : terms) top = std::max(top, n);
  const std::vector<double> p = assoc_mp_sequence(top, x);
  double acc = 0.0;
  for (const auto& [n, c] : terms) acc += c * p[n];
  return acc;
}

FunctionSpec parse_function_spec(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty function spec");
  FunctionSpec spec;
  std::size_t pos = 0;
  while (pos < s.size()) {
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1.0 : 1.0;
      ++pos;
    } else if (pos != 0) {
      throw std::invalid_argument("expected '+' or '-' in function spec");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') {
      // allow an exponent sign inside a coefficient such as 1e-3
      if ((s[end] == 'e' || s[end] == 'E') && end + 1 < s.size() &&
          (s[end + 1] == '+' || s[end + 1] == '-') && end > pos &&
          std::isdigit(static_cast<unsigned char>(s[end - 1]))) {
        end += 2;
        continue;
      }
      ++end;
    }
    const std::string term = s.substr(pos, end - pos);
    double coefficient = 1.0;
    std::string token = term;
    if (const auto star = term.find('*'); star != std::string::npos) {
      coefficient = parse_real(term.substr(0, star), "coefficient");
      token = term.substr(star + 1);
    }
    if (token.size() < 2 || token[0] != 'p') {
      throw std::invalid_argument("expected p<n> in function spec, got '" + token + "'");
    }
    int degree = 0;
    const auto [ptr, ec] = std::from_chars(token.data() + 1, token.data() + token.size(), degree);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad degree in '" + token + "'");
    }
    if (degree < 0 || degree > kMaxSpecDegree) {
      throw std::invalid_argument("degree must lie in 0..10, got " + std::to_string(degree));
    }
    spec.terms.emplace_back(degree, sign * coefficient);
    pos = end;
  }
  return spec;
}

std::complex<double> parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty complex number");
  if (s.back() != 'i') return {parse_real(s, "complex number"), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not the leading one or an exponent sign
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : parse_real(re, "real part"), parse_real(im, "imaginary part")};
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  for (int digits = 1; digits <= 15; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    if (std::strtod(buf, nullptr) == value) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

std::string format_complex(std::complex<double> value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", value.real(), value.imag());
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Associated Meixner-Pollaczek polynomials: evaluation and identity checks",
               "ampoly"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "plain";
  std::optional<std::string> seed;
  app.add_option("--format", format_name, "Output format: csv, json or plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}));
  app.add_option("--seed", seed, "Not supported; every command is deterministic");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one polynomial");
  std::string family_name = "assoc";
  int degree = 0;
  std::optional<double> x_arg;
  std::optional<double> y_arg;
  eval->add_option("--family", family_name, "assoc, classical or monic");
  eval->add_option("--n", degree, "Degree")->required()->check(CLI::NonNegativeNumber);
  eval->add_option("--x", x_arg, "Argument");
  eval->add_option("--y", y_arg, "Argument (alias, natural for the classical family)");

  // plot-data
  auto* plot = app.add_subcommand("plot-data", "Tabulate p_n on a uniform grid");
  std::string n_list = "0,1,2,3,4";
  double x_min = -4.0;
  double x_max = 4.0;
  int steps = 401;
  plot->add_option("--n-list", n_list, "Comma separated degrees");
  plot->add_option("--x-min", x_min);
  plot->add_option("--x-max", x_max);
  plot->add_option("--steps", steps);

  // verify
  auto* verify = app.add_subcommand("verify", "Run identity verification suites");
  std::string suite_arg = "all";
  std::optional<double> tol;
  verify->add_option("--suite", suite_arg)->check(CLI::IsMember(suite_names()));
  verify->add_option("--tol", tol, "Override every tolerance")
      ->check(CLI::PositiveNumber);

  // transform
  auto* transform = app.add_subcommand("transform", "Bargmann transform of a combination of p_n");
  std::string f_spec;
  std::string z_text = "0";
  transform->add_option("--f", f_spec, "e.g. \"p1+2*p2\"")->required();
  transform->add_option("--z", z_text, "e.g. 0.3+0.2i");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (seed) throw UsageError("--seed is not supported: no command uses randomness");
    const OutputFormat fmt = parse_format(format_name);

    if (*eval) {
      if (x_arg.has_value() == y_arg.has_value()) {
        throw UsageError("eval needs exactly one of --x or --y");
      }
      const PolynomialFamily family = parse_family(family_name);
      const double arg = x_arg ? *x_arg : *y_arg;
      const double value = evaluate(family, degree, arg);
      if (!std::isfinite(value)) throw Overflow("eval: value is not representable");
      switch (fmt) {
        case OutputFormat::plain: out << format_number(value) << '\n'; break;
        case OutputFormat::csv:
          out << "family,n,arg,value\n"
              << family_name << ',' << degree << ',' << format_number(arg) << ','
              << format_number(value) << '\n';
          break;
        case OutputFormat::json: {
          const nlohmann::json j{{"family", family_name}, {"n", degree}, {"arg", arg},
                                 {"value", json_number(value)}};
          out << j.dump() << '\n';
          break;
        }
      }
      return kExitOk;
    }

    if (*plot) {
      if (!(x_min < x_max)) throw UsageError("plot-data needs --x-min < --x-max");
      if (steps < 2) throw UsageError("plot-data needs --steps >= 2");
      const std::vector<int> degrees = parse_int_list(n_list);
      const int top = *std::max_element(degrees.begin(), degrees.end());
      // plain output stays CSV-shaped; it is meant for plotting tools
      const bool as_json = fmt == OutputFormat::json;
      nlohmann::json rows = nlohmann::json::array();
      if (!as_json) {
        out << 'x';
        for (int n : degrees) out << ",p" << n;
        out << '\n';
      }
      for (int k = 0; k < steps; ++k) {
        const double x = x_min + (x_max - x_min) * k / (steps - 1);
        const std::vector<double> p = assoc_mp_sequence(top, x);
        if (as_json) {
          nlohmann::json row{{"x", x}};
          for (int n : degrees) row["p" + std::to_string(n)] = json_number(p[n]);
          rows.push_back(std::move(row));
        } else {
          out << format_number(x);
          for (int n : degrees) out << ',' << format_number(p[n]);
          out << '\n';
        }
      }
      if (as_json) out << rows.dump() << '\n';
      return kExitOk;
    }

    if (*verify) {
      const auto reports = run_suite(parse_suite(suite_arg), tol);
      print_reports(reports, fmt, out);
      const bool ok = std::all_of(reports.begin(), reports.end(),
                                  [](const VerificationReport& r) { return r.passed; });
      return ok ? kExitOk : kExitVerificationFailed;
    }

    if (*transform) {
      FunctionSpec spec;
      std::complex<double> z;
      try {
        spec = parse_function_spec(f_spec);
        z = parse_complex(z_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const BargmannTransform b(build_hermite_style_grid(kDefaultWeightNodes));
      const std::complex<double> value = b(spec, z);
      if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        throw Overflow("transform: value is not representable");
      }
      switch (fmt) {
        case OutputFormat::plain: out << format_complex(value) << '\n'; break;
        case OutputFormat::csv:
          out << "re,im\n" << format_number(value.real()) << ',' << format_number(value.imag()) << '\n';
          break;
        case OutputFormat::json: {
          const nlohmann::json j{{"f", f_spec}, {"z", {z.real(), z.imag()}},
                                 {"re", json_number(value.real())},
                                 {"im", json_number(value.imag())}};
          out << j.dump() << '\n';
          break;
        }
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace ampoly::cli
