#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult run_cli(const std::string& args) {
  static int counter = 0;
  const auto err_path = std::filesystem::temp_directory_path() /
                        ("infoaging_cli_err_" + std::to_string(++counter) + ".txt");
  const std::string cmd = std::string(INFOAGING_CLI_PATH) + " " + args + " 2>" + err_path.string();

  CliResult result;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.err = slurp(err_path);
  std::filesystem::remove(err_path);
  return result;
}

std::filesystem::path write_temp_model(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << body;
  return path;
}

const std::string kModel = std::string("--model ") + INFOAGING_AR4_JSON;

std::size_t count_lines(const std::string& text) {
  std::size_t n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("acf subcommand succeeds on the shipped model") {
  const CliResult r = run_cli("acf " + kModel + " --max-lag 8");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("lag,gamma\n", 0) == 0);
  CHECK(count_lines(r.out) == 10);
}

TEST_CASE("entropy-curve subcommand emits delta-major rows") {
  const CliResult r = run_cli("entropy-curve " + kModel + " --max-aoi 5 --loss quadratic");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("delta,l,loss,base,H\n", 0) == 0);
  CHECK(count_lines(r.out) == 1 + 6 * 5);
}

TEST_CASE("epsilon subcommand emits one row per length") {
  const CliResult r = run_cli("epsilon " + kModel + " --lengths 1,4 --search-bound 3 --base e");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("l,epsilon,argmax_mu,argmax_nu,base\n", 0) == 0);
  CHECK(count_lines(r.out) == 3);
}

TEST_CASE("validate subcommand: exit 0 honest, exit 3 tampered") {
  const std::string base_args = "validate " + kModel + " --samples 20000 --seed 1";
  const CliResult ok = run_cli(base_args);
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.rfind("delta,l,closed_form,empirical,stderr,z\n", 0) == 0);
  CHECK(ok.err.rfind("# rng=mt19937_64-boxmuller seed=1 samples=20000", 0) == 0);

  const CliResult bad = run_cli(base_args + " --tamper 0.05");
  CHECK(bad.exit_code == 3);
}

TEST_CASE("identical config and seed give byte-identical output") {
  const std::string args = "entropy-curve " + kModel + " --max-aoi 12 --loss log --base 2";
  const CliResult a = run_cli(args);
  const CliResult b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);

  const std::string vargs = "validate " + kModel + " --samples 20000 --seed 77";
  CHECK(run_cli(vargs).out == run_cli(vargs).out);
}

TEST_CASE("--out writes the same bytes to a file") {
  const auto out_path = std::filesystem::temp_directory_path() / "infoaging_acf_out.csv";
  std::filesystem::remove(out_path);
  const CliResult direct = run_cli("acf " + kModel + " --max-lag 6");
  const CliResult redirected = run_cli("acf " + kModel + " --max-lag 6 --out " + out_path.string());
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(out_path) == direct.out);
  std::filesystem::remove(out_path);
}

TEST_CASE("config and model errors exit with code 2 and a one-line error") {
  const CliResult missing = run_cli("acf --model /nonexistent/m.json");
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.rfind("error: invalid-model:", 0) == 0);
  CHECK(count_lines(missing.err) == 1);

  const auto bad_json = write_temp_model("infoaging_bad.json", "{nope");
  CHECK(run_cli("acf --model " + bad_json.string()).exit_code == 2);

  const auto unknown_field = write_temp_model(
      "infoaging_unknown.json",
      R"({"coeffs": [0.5], "sigma2_w": 1.0, "sigma2_n": 0.0, "order": 1})");
  CHECK(run_cli("acf --model " + unknown_field.string()).exit_code == 2);

  const auto unit_root = write_temp_model(
      "infoaging_unit.json", R"({"coeffs": [1.0], "sigma2_w": 1.0, "sigma2_n": 0.0})");
  const CliResult nonstationary = run_cli("acf --model " + unit_root.string());
  CHECK(nonstationary.exit_code == 2);
  CHECK(nonstationary.err.find("not stationary") != std::string::npos);

  CHECK(run_cli("").exit_code == 2);                                   // missing subcommand
  CHECK(run_cli("acf").exit_code == 2);                                // missing --model
  CHECK(run_cli("frobnicate " + kModel).exit_code == 2);               // unknown subcommand
  CHECK(run_cli("entropy-curve " + kModel + " --loss huber").exit_code == 2);
  CHECK(run_cli("entropy-curve " + kModel + " --base 10").exit_code == 2);
  CHECK(run_cli("entropy-curve " + kModel + " --max-aoi -3").exit_code == 2);
  CHECK(run_cli("entropy-curve " + kModel + " --lengths 5..1").exit_code == 2);
  CHECK(run_cli("epsilon " + kModel + " --out /nonexistent/dir/x.csv").exit_code == 2);

  std::filesystem::remove(bad_json);
  std::filesystem::remove(unknown_field);
  std::filesystem::remove(unit_root);
}

TEST_CASE("--help exits zero") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("epsilon --help").exit_code == 0);
}
