#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#ifndef ZEROPROD_CLI_PATH
#error "ZEROPROD_CLI_PATH must point at the zeroprod executable"
#endif

namespace {

struct RunResult {
  int status;       // process exit code, or -1 if it did not exit normally
  std::string out;  // captured stdout
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ZEROPROD_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
  const int rc = pclose(pipe);
  return {WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, out};
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

std::vector<std::string> fields_of(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

double as_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

TEST_CASE("zeros: laguerre values in CSV with 1-based indices") {
  const RunResult r = run_cli("zeros --family laguerre --n 2 --alpha 0");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] == "index,value");
  const auto row1 = fields_of(lines[1]);
  const auto row2 = fields_of(lines[2]);
  REQUIRE(row1.size() == 2);
  CHECK(row1[0] == "1");
  CHECK(row2[0] == "2");
  CHECK(std::fabs(as_double(row1[1]) - (2.0 - std::sqrt(2.0))) <= 1e-12);
  CHECK(std::fabs(as_double(row2[1]) - (2.0 + std::sqrt(2.0))) <= 1e-12);
}

TEST_CASE("zeros: hermite positive zeros need no alpha") {
  const RunResult r = run_cli("zeros --family hermite --n 4");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(std::fabs(as_double(fields_of(lines[1])[1]) - 0.52464762327529366) <= 1e-9);
  CHECK(std::fabs(as_double(fields_of(lines[2])[1]) - 1.6506801238857845) <= 1e-9);
}

TEST_CASE("zeros: usage and domain errors exit with 2") {
  CHECK(run_cli("zeros --family laguerre --n 2").status == 2);      // missing alpha
  CHECK(run_cli("zeros --family hermite --n 4 --alpha 0").status == 2);  // stray alpha
  CHECK(run_cli("zeros --family fourier --n 4").status == 2);
  CHECK(run_cli("zeros --family laguerre --n 0 --alpha 0").status == 2);
  CHECK(run_cli("zeros --family laguerre --n 5 --alpha=-2").status == 2);
  CHECK(run_cli("").status == 2);              // a subcommand is required
  CHECK(run_cli("--bogus").status == 2);       // unknown flag
  CHECK(run_cli("frobnicate").status == 2);    // unknown subcommand
}

TEST_CASE("products: hermite-even sequence carries the reduced alpha") {
  const RunResult r = run_cli("products --family hermite-even --n-max 20");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 10);  // header + n = 4,6,...,20
  CHECK(lines[0] == "n,alpha,y");
  bool saw18 = false;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 3);
    CHECK(as_double(f[1]) == -0.5);
    if (f[0] == "18") {
      saw18 = true;
      CHECK(std::fabs(as_double(f[2]) - 1.30382961637360) <= 1e-10);
    }
  }
  CHECK(saw18);
}

TEST_CASE("products: laguerre sequence starts at degree 2") {
  const RunResult r = run_cli("products --family laguerre --n-max 5 --alpha 0");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  const auto first = fields_of(lines[1]);
  CHECK(first[0] == "2");
  CHECK(std::fabs(as_double(first[2]) - 2.0) <= 1e-11);
  // laguerre products require alpha
  CHECK(run_cli("products --family laguerre --n-max 5").status == 2);
}

TEST_CASE("path: grid rows with NaN derivatives at the endpoints") {
  const RunResult r = run_cli("path --n 20 --alpha 0.5 --f t --t-grid 11,0,1");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] ==
        "t,lambda_min,lambda_max,product,dmin_closed,dmin_fd,dmax_closed,dmax_fd");
  const auto first = fields_of(lines[1]);
  REQUIRE(first.size() == 8);
  CHECK(as_double(first[0]) == 0.0);
  for (int c = 4; c < 8; ++c) CHECK(std::isnan(as_double(first[c])));
  const auto last = fields_of(lines[11]);
  CHECK(as_double(last[0]) == 1.0);
  for (int c = 4; c < 8; ++c) CHECK(std::isnan(as_double(last[c])));

  const auto mid = fields_of(lines[6]);  // t = 0.5
  CHECK(as_double(mid[0]) == 0.5);
  const double product = as_double(mid[3]);
  CHECK(std::fabs(product - as_double(mid[1]) * as_double(mid[2])) <=
        1e-12 * std::fabs(product));
  const double dmin_closed = as_double(mid[4]);
  const double dmin_fd = as_double(mid[5]);
  CHECK(std::fabs(dmin_closed - dmin_fd) <= 1e-5 * std::fabs(dmin_closed));
  CHECK(dmin_closed < 0.0);
  CHECK(as_double(mid[6]) > 0.0);
}

TEST_CASE("bounds: one row per (n, alpha) cell, n outer and alpha inner") {
  const RunResult r = run_cli("bounds --n-min 5 --n-max 6 --alpha-list 0,1");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "n,alpha,dk,m0,m2,prod1_margin,prod2_K");
  CHECK(fields_of(lines[1])[0] == "5");
  CHECK(fields_of(lines[1])[1] == "0");
  CHECK(fields_of(lines[2])[0] == "5");
  CHECK(fields_of(lines[2])[1] == "1");
  CHECK(fields_of(lines[3])[0] == "6");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 7);
    CHECK(as_double(f[5]) > 0.0);          // prod1 margin positive here
    CHECK(as_double(f[6]) > 1.0 / 12.0);   // prod2 constant above the floor
  }
  const auto cell = fields_of(lines[1]);
  CHECK(std::fabs(as_double(cell[2]) - 16.791561975888499) <= 1e-12);
  CHECK(std::fabs(as_double(cell[3]) - 0.26399037888213783) <= 1e-14);
}

TEST_CASE("verify: a holding check exits 0 and reports holds rows") {
  const RunResult r = run_cli(
      "verify --check proposition --alpha-list 0 --n-min 5 --n-max 6 "
      "--t-grid 6,0,0.5");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 5);  // header + (increasing, Qmin) x (n=5, n=6)
  CHECK(lines[0] == "case,verdict,margin");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = fields_of(lines[i]);
    REQUIRE(f.size() == 3);
    CHECK(f[1] == "holds");
    CHECK(as_double(f[2]) > 0.0);
  }
}

TEST_CASE("verify: the quote mismatch drives a nonzero exit") {
  const RunResult r = run_cli("verify --check gazeau --n-max 20");
  CHECK(r.status == 1);
  bool saw_fail = false;
  for (const std::string& line : lines_of(r.out)) {
    const auto f = fields_of(line);
    if (f.size() == 3 && f[1] == "fails") saw_fail = true;
  }
  CHECK(saw_fail);
}

TEST_CASE("identities: seven named residuals at solver roundoff") {
  const RunResult r = run_cli("identities --n 10 --alpha 0 --f t --t 0.3");
  CHECK(r.status == 0);
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() == 8);
  CHECK(lines[0] == "identity,residual");
  const char* names[] = {"relation", "combination1", "norm", "rel1",
                         "rel2",     "P1",           "P2"};
  for (int i = 0; i < 7; ++i) {
    const auto f = fields_of(lines[i + 1]);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == names[i]);
    CHECK(as_double(f[1]) <= 1e-8);
  }
  // t must be interior to the transition interval
  CHECK(run_cli("identities --n 10 --alpha 0 --f t --t 0").status == 2);
}

TEST_CASE("the --out flag writes the same CSV to a file") {
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / "zeroprod_cli_out_test.csv";
  std::filesystem::remove(tmp);
  const RunResult direct = run_cli("zeros --family laguerre --n 3 --alpha 0.5");
  const RunResult redirected = run_cli(
      "zeros --family laguerre --n 3 --alpha 0.5 --out " + tmp.string());
  CHECK(redirected.status == 0);
  CHECK(redirected.out.empty());
  std::ifstream in(tmp);
  REQUIRE(in.good());
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::filesystem::remove(tmp);
}
