#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ampoly/cli/commands.hpp"
#include "ampoly/cli/verification.hpp"

using namespace ampoly::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

// exit status and stdout of the installed binary
std::pair<int, std::string> shell(const std::string& args) {
  const std::string cmd = std::string("\"") + AMPOLY_BINARY + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe)) text += buf;
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(-2.0 / 3.0) == "-0.666666666666667");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-300) == "1e-300");
  CHECK(format_number(std::nan("")) == "nan");
  CHECK(format_complex({0.06, 0.0}) == "0.06+0i");
  CHECK(format_complex({-1.5, -2.0}) == "-1.5-2i");
}

TEST_CASE("parsing") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("json") == OutputFormat::json);
  CHECK(parse_format("plain") == OutputFormat::plain);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);

  CHECK(parse_complex("0.4") == std::complex<double>(0.4, 0.0));
  CHECK(parse_complex("0.3+0i") == std::complex<double>(0.3, 0.0));
  CHECK(parse_complex("-1.5-2i") == std::complex<double>(-1.5, -2.0));
  CHECK(parse_complex("2i") == std::complex<double>(0.0, 2.0));
  CHECK(parse_complex("-i") == std::complex<double>(0.0, -1.0));
  CHECK(parse_complex("1e-3+1e-2i") == std::complex<double>(1e-3, 1e-2));
  CHECK(parse_complex(" 1 + 2i ") == std::complex<double>(1.0, 2.0));
  CHECK_THROWS_AS(parse_complex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_complex("1+2j"), std::invalid_argument);
}

TEST_CASE("function specs") {
  const auto a = parse_function_spec("p1+2*p2");
  REQUIRE(a.terms.size() == 2);
  CHECK(a.terms[0] == std::pair<int, double>(1, 1.0));
  CHECK(a.terms[1] == std::pair<int, double>(2, 2.0));
  const auto b = parse_function_spec("-0.5*p3 + p0");
  CHECK(b.terms[0] == std::pair<int, double>(3, -0.5));
  CHECK(b(0.0) == 1.0);
  const auto c = parse_function_spec("1e-3*p10");
  CHECK(c.terms[0].second == 1e-3);
  CHECK(parse_function_spec("p2")(0.0) == doctest::Approx(-2.0 / 3.0).epsilon(1e-15));
  for (const char* bad : {"", "q1", "p11", "p", "2*", "p1p2", "p-1", "x*p1", "p1+"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_function_spec(bad), std::invalid_argument);
  }
}

TEST_CASE("eval") {
  auto r = run({"eval", "--family", "assoc", "--n", "2", "--x", "0"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "-0.666666666666667\n");
  r = run({"eval", "--family", "assoc", "--n", "0", "--x", "3.5"});
  CHECK(r.out == "1\n");
  r = run({"eval", "--family", "classical", "--n", "1", "--y", "0.25"});
  CHECK(r.out == "0.5\n");
  r = run({"eval", "--family", "monic", "--n", "2", "--x", "2"});
  CHECK(r.out == "2\n");
  r = run({"--format", "json", "eval", "--family", "assoc", "--n", "4", "--x", "0"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["n"] == 4);
  CHECK(std::abs(j["value"].get<double>() - 8.0 / 15.0) < 1e-15);
  r = run({"--format", "csv", "eval", "--family", "assoc", "--n", "1", "--x", "1"});
  CHECK(lines(r.out).at(0) == "family,n,arg,value");
  CHECK(lines(r.out).at(1) == "assoc,1,1,0.707106781186548");
}

TEST_CASE("plot-data") {
  auto r = run({"--format", "csv", "plot-data"});
  REQUIRE(r.code == kExitOk);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 402);
  CHECK(rows[0] == "x,p0,p1,p2,p3,p4");
  CHECK(rows[1].rfind("-4,1,", 0) == 0);
  CHECK(rows[201] == "0,1,0,-0.666666666666667,0,0.533333333333333");
  CHECK(rows[401].rfind("4,1,", 0) == 0);

  r = run({"--format", "json", "plot-data", "--n-list", "1,3", "--x-min", "-1", "--x-max", "1",
           "--steps", "5"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(j[k]["x"].get<double>() == -j[4 - k]["x"].get<double>());
    // odd degrees are antisymmetric
    CHECK(j[k]["p1"].get<double>() == -j[4 - k]["p1"].get<double>());
    CHECK(j[k]["p3"].get<double>() == -j[4 - k]["p3"].get<double>());
  }
  CHECK(run({"plot-data", "--steps", "1"}).code == kExitUsage);
  CHECK(run({"plot-data", "--x-min", "2", "--x-max", "1"}).code == kExitUsage);
  CHECK(run({"plot-data", "--n-list", "1,x"}).code == kExitUsage);
}

TEST_CASE("verify") {
  auto r = run({"--format", "json", "verify", "--suite", "polynomials"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == run_suite(Suite::polynomials).size());
  for (const auto& item : j) {
    CHECK(item["passed"].get<bool>());
    CHECK(item["max_residual"].get<double>() < item["tolerance"].get<double>());
  }
  // same input, same bytes
  CHECK(run({"--format", "json", "verify", "--suite", "polynomials"}).out == r.out);

  r = run({"--format", "csv", "verify", "--suite", "gf"});
  CHECK(r.code == kExitOk);
  CHECK(lines(r.out).at(0) == "identity_id,passed,max_residual,tolerance");

  r = run({"verify", "--suite", "remark41"});
  CHECK(r.code == kExitOk);
  for (const auto& line : lines(r.out)) CHECK(line.rfind("PASS ", 0) == 0);

  r = run({"verify", "--suite", "polynomials", "--tol", "1e-30"});
  CHECK(r.code == kExitVerificationFailed);
  CHECK(r.out.find("FAIL ") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(run({"verify", "--tol", "-1"}).code == kExitUsage);
}

TEST_CASE("transform") {
  auto r = run({"transform", "--f", "p0", "--z", "0.5+0.5i"});
  REQUIRE(r.code == kExitOk);
  const auto v = parse_complex(r.out.substr(0, r.out.size() - 1));
  CHECK(std::abs(v - 1.0) < 1e-7);
  r = run({"--format", "json", "transform", "--f", "p2", "--z", "0.6"});
  REQUIRE(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(std::abs(j["re"].get<double>() - 0.06) < 1e-7);
  CHECK(std::abs(j["im"].get<double>()) < 1e-7);
  r = run({"--format", "csv", "transform", "--f", "p1+2*p2", "--z", "0.6"});
  REQUIRE(r.code == kExitOk);
  const double re = std::stod(lines(r.out).at(1));
  CHECK(std::abs(re - (0.3 + 0.12)) < 1e-7);
  CHECK(run({"transform", "--f", "p12"}).code == kExitUsage);
  CHECK(run({"transform", "--f", "p1", "--z", "1+j"}).code == kExitUsage);
}

TEST_CASE("usage and numerical errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"eval", "--family", "assoc", "--n", "2"}).code == kExitUsage);
  CHECK(run({"eval", "--family", "assoc", "--n", "2", "--x", "1", "--y", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--family", "hermite", "--n", "2", "--x", "1"}).code == kExitUsage);
  CHECK(run({"eval", "--family", "assoc", "--n", "-2", "--x", "1"}).code == kExitUsage);
  CHECK(run({"--format", "xml", "eval", "--family", "assoc", "--n", "2", "--x", "1"}).code ==
        kExitUsage);
  const auto seeded = run({"--seed", "3", "eval", "--family", "assoc", "--n", "2", "--x", "1"});
  CHECK(seeded.code == kExitUsage);
  CHECK(seeded.err.find("--seed") != std::string::npos);
  const auto huge = run({"eval", "--family", "monic", "--n", "400", "--x", "1e300"});
  CHECK(huge.code == kExitNumerical);
  CHECK(huge.out.empty());
}

TEST_CASE("binary exit codes") {
  CHECK(shell("eval --family assoc --n 2 --x 0") == std::pair<int, std::string>(0, "-0.666666666666667\n"));
  CHECK(shell("verify --suite polynomials --tol 1e-30").first == 1);
  CHECK(shell("eval --n 2").first == 2);
  CHECK(shell("eval --family monic --n 400 --x 1e300").first == 3);
  const auto [code, text] = shell("--format json verify --suite corollary41");
  CHECK(code == 0);
  const auto j = nlohmann::json::parse(text);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}
