// End-to-end checks of the rmt binary: exit codes, output formats,
// byte-identical reruns.  The binary path arrives as the first positional
// argument (added by CMake).
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "/tmp/rmt_cli_out.txt";
  const std::string cmd = g_binary + " " + args + " > " + out_path + " 2>/dev/null";
  const int rc = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("tw subcommand values and exit codes") {
  RunResult r = run_cli("tw tw1 cdf -1.27");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(std::stod(r.out) - 0.50) < 0.005);

  r = run_cli("tw tw1 quantile 0.99");
  CHECK(r.exit_code == 0);
  CHECK(std::fabs(std::stod(r.out) - 2.02) < 0.02);

  r = run_cli("tw tw2 cdf 6");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1.000000\n");

  r = run_cli("tw tw1 quantile 1.5");
  CHECK(r.exit_code == 2);
  r = run_cli("tw tw3 cdf 0");
  CHECK(r.exit_code == 2);
}

TEST_CASE("pca-test: io failure is exit 3, valid input works") {
  RunResult r = run_cli("pca-test /tmp/does_not_exist_12345.csv");
  CHECK(r.exit_code == 3);

  {
    std::ofstream f("/tmp/rmt_cli_ragged.csv");
    f << "1,2,3\n4,5\n";
  }
  r = run_cli("pca-test /tmp/rmt_cli_ragged.csv");
  CHECK(r.exit_code == 3);

  {
    std::ofstream f("/tmp/rmt_cli_zeros.csv");
    for (int i = 0; i < 40; ++i) f << "0\n";
  }
  r = run_cli("pca-test /tmp/rmt_cli_zeros.csv");
  CHECK(r.exit_code == 0);
  const auto pos = r.out.find("\"p_value\": ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 11)) > 0.9999);
}

TEST_CASE("verify identities reports json and exit 0") {
  const RunResult r = run_cli("verify identities");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("sample-dump round trips through a file") {
  const RunResult r = run_cli(
      "sample-dump --n 20 --p 5 --k 2 --reps 7 --seed 9 --out /tmp/rmt_dump.csv");
  CHECK(r.exit_code == 0);
  const std::string body = slurp("/tmp/rmt_dump.csv");
  CHECK(body.rfind("n,p,k,field,path,seed\n20,5,2,real,tridiagonal,9\n", 0) == 0);
  int lines = 0;
  for (char c : body)
    if (c == '\n') ++lines;
  CHECK(lines == 3 + 7);
}

TEST_CASE("table csv is byte identical across processes") {
  const std::string args =
      "table --dims 5x20 --reps 300 --seed 31 --workers 2 --out /tmp/rmt_tab1";
  CHECK(run_cli(args).exit_code == 0);
  const std::string first = slurp("/tmp/rmt_tab1.csv");
  CHECK(run_cli("table --dims 5x20 --reps 300 --seed 31 --workers 2 --out "
                "/tmp/rmt_tab2")
            .exit_code == 0);
  CHECK(first == slurp("/tmp/rmt_tab2.csv"));
  CHECK(first.rfind("quantile,tw", 0) == 0);
  CHECK(slurp("/tmp/rmt_tab1.json") == slurp("/tmp/rmt_tab2.json"));
}

int main(int argc, char** argv) {
  doctest::Context ctx;
  int first_positional = argc;
  for (int i = 1; i < argc; ++i) {
    if (argv[i][0] != '-') {
      g_binary = argv[i];
      first_positional = i;
      break;
    }
  }
  if (g_binary.empty()) {
    std::fprintf(stderr, "usage: rmt_cli_tests <path-to-rmt-binary>\n");
    return 1;
  }
  ctx.applyCommandLine(first_positional, argv);
  return ctx.run();
}
