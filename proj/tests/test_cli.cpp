// CLI integration checks driven through the real binary:
//   test_cli --cli /path/to/huslab
// Exercises each subcommand's documented behavior and exit codes.

#include "huslab/json_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

std::string g_cli_path;
int g_failures = 0;

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string out_path = "/tmp/huslab_cli_test_" +
                               std::to_string(::getpid()) + "_" +
                               std::to_string(counter++);
  const std::string command = env + (env.empty() ? "" : " ") + "\"" +
                              g_cli_path + "\" " + args + " > " + out_path +
                              " 2>/dev/null";
  const int status = std::system(command.c_str());
  CliRun run;
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  run.output = buf.str();
  std::remove(out_path.c_str());
  return run;
}

void check(bool ok, const std::string& what) {
  if (ok) {
    std::printf("[ok]   %s\n", what.c_str());
  } else {
    std::printf("[FAIL] %s\n", what.c_str());
    ++g_failures;
  }
}

huslab::Json parse_output(const CliRun& run) {
  return huslab::Json::parse(run.output);
}

std::string write_temp_json(const std::string& text, const char* name) {
  const std::string path =
      "/tmp/huslab_cli_input_" + std::to_string(::getpid()) + "_" + name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  return path;
}

int count_lines(const std::string& text) {
  int lines = 0;
  for (char c : text)
    if (c == '\n')
      ++lines;
  return lines;
}

void test_constant() {
  const CliRun bs = run_cli("constant --operator bernstein-schurer -n 2 -p 1");
  check(bs.exit_code == 0, "constant bernstein-schurer exits 0");
  const huslab::Json j = parse_output(bs);
  check(j["K_exact"] == "5/1", "constant bernstein-schurer K_exact 5/1");
  check(j["config"]["seed"] == 0 && j["config"]["norm"] == "interval",
        "constant report prints resolved defaults");

  const CliRun lorentz = run_cli("constant --operator lorentz -n 4");
  check(lorentz.exit_code == 0 &&
            parse_output(lorentz)["status"] == "unstable",
        "constant lorentz reports unstable");

  const CliRun bad = run_cli("constant --operator stancu -n 2 -a 1 -b 0");
  check(bad.exit_code == 2, "constant stancu with a > b exits 2");

  const CliRun disk = run_cli(
      "constant --operator bernstein-schurer -n 1 -p 0 --norm disk");
  check(disk.output.find("exploratory") != std::string::npos,
        "disk-norm constant is flagged exploratory");
}

void test_sweep() {
  const CliRun six = run_cli(
      "sweep --operator bernstein-schurer --n-range 1:3 --p-range 0:1 "
      "--format csv");
  check(six.exit_code == 0 && count_lines(six.output) == 7,
        "sweep 1:3 x 0:1 emits header plus 6 rows");
  check(six.output.find("bernstein_schurer,2,1,5,1,5,stable") !=
            std::string::npos,
        "sweep row (2,1) carries K = 5");

  const CliRun single = run_cli(
      "sweep --operator bernstein --n-range 4 --format csv");
  check(single.exit_code == 0 && count_lines(single.output) == 2,
        "single-point sweep emits one row");

  const CliRun empty = run_cli(
      "sweep --operator bernstein --n-range 3:1 --format csv");
  check(empty.exit_code == 2, "empty sweep range exits 2");

  // factor relation reconstructable from the loss-free CSV columns
  const CliRun bs = run_cli(
      "sweep --operator bernstein-schurer --n-range 1:4 --p-range 0:2 "
      "--format csv");
  const CliRun ks = run_cli(
      "sweep --operator kantorovich-schurer --n-range 1:4 --p-range 0:2 "
      "--format csv");
  std::istringstream bs_in(bs.output), ks_in(ks.output);
  std::string bs_line, ks_line;
  std::getline(bs_in, bs_line);
  std::getline(ks_in, ks_line);
  bool factor_ok = true;
  while (std::getline(bs_in, bs_line) && std::getline(ks_in, ks_line)) {
    const auto field = [](const std::string& line, int index) {
      size_t pos = 0;
      for (int i = 0; i < index; ++i)
        pos = line.find(',', pos) + 1;
      return line.substr(pos, line.find(',', pos) - pos);
    };
    const int n = std::stoi(field(bs_line, 1));
    const int p = std::stoi(field(bs_line, 2));
    const huslab::BigRational bs_k(huslab::BigInt(field(bs_line, 3)),
                                   huslab::BigInt(field(bs_line, 4)));
    const huslab::BigRational ks_k(huslab::BigInt(field(ks_line, 3)),
                                   huslab::BigInt(field(ks_line, 4)));
    factor_ok = factor_ok &&
                ks_k == huslab::BigRational(n + 1, n + p + 1) * bs_k;
  }
  check(factor_ok, "CSV tables reconstruct the (n+1)/(n+p+1) factor exactly");
}

void test_lorentz_rep() {
  const std::string cheb = write_temp_json(
      R"({"basis":"monomial","degree":2,"scalar_format":"rational",
          "coefficients":["1","-8","8"]})",
      "cheb");
  const CliRun rep =
      run_cli("lorentz-rep --input " + cheb + " --degree 2");
  check(rep.exit_code == 0, "lorentz-rep exits 0");
  const huslab::Json j = parse_output(rep);
  const auto& coeffs = j["representation"]["coefficients"];
  check(coeffs[0]["re"] == "1/1" && coeffs[1]["re"] == "-6/1" &&
            coeffs[2]["re"] == "1/1",
        "lorentz-rep of 8x^2-8x+1 is (1,-6,1)");

  const std::string one = write_temp_json(
      R"({"basis":"monomial","degree":0,"coefficients":["1"]})", "one");
  const CliRun constant_rep =
      run_cli("lorentz-rep --input " + one + " --degree 1");
  const huslab::Json cj = parse_output(constant_rep);
  check(constant_rep.exit_code == 0 &&
            cj["representation"]["coefficients"][0]["re"] == "1/1" &&
            cj["representation"]["coefficients"][1]["re"] == "1/1",
        "lorentz-rep of 1 at degree 1 is (1,1)");

  const std::string cubic = write_temp_json(
      R"({"basis":"monomial","degree":3,"coefficients":[0,0,0,"1"]})",
      "cubic");
  check(run_cli("lorentz-rep --input " + cubic + " --degree 2").exit_code == 2,
        "degree-3 input at target degree 2 exits 2");

  const std::string garbage = write_temp_json("{not json", "garbage");
  check(run_cli("lorentz-rep --input " + garbage + " --degree 2").exit_code ==
            1,
        "malformed polynomial file exits 1");
  check(run_cli("lorentz-rep --input /nonexistent.json --degree 2")
                .exit_code == 1,
        "missing input file exits 1");
  std::remove(cheb.c_str());
  std::remove(one.c_str());
  std::remove(cubic.c_str());
  std::remove(garbage.c_str());
}

void test_bound_check() {
  const CliRun big = run_cli("bound-check --degree 12 --trials 500 --seed 42");
  check(big.exit_code == 0, "bound-check degree 12 exits 0");
  const huslab::Json j = parse_output(big);
  check(j["max_ratio"].get<double>() <= 1.0 + 1e-9,
        "bound-check max_ratio within 1 + 1e-9");
  check(j["chebyshev_equality"] == true, "bound-check equality case holds");

  const CliRun tiny = run_cli("bound-check --degree 1 --trials 1");
  check(tiny.exit_code == 0, "bound-check degree 1, one trial passes");
}

void test_apply() {
  const CliRun lorentz = run_cli(
      "apply --operator lorentz -n 2 --function taylor:[0,0,1] --at 1+0i");
  check(lorentz.exit_code == 0, "apply lorentz exits 0");
  const huslab::Json j = parse_output(lorentz);
  check(j["value"]["re"] == "1/2" &&
            j["value_float"]["re"].get<double>() == 0.5,
        "apply lorentz taylor:[0,0,1] at 1 gives 0.5");

  const CliRun beta = run_cli(
      "apply --operator beta -n 5 --function poly:[0,1] --at 1/3");
  check(beta.exit_code == 0 &&
            parse_output(beta)["value"]["re"] == "8/21",
        "apply beta e_1 at 1/3 gives (5/3+1)/7 = 8/21");

  const CliRun szasz = run_cli(
      "apply --operator szasz-mirakjan -n 3 --function poly:[1] --at 0.7");
  const huslab::Json sj = parse_output(szasz);
  check(szasz.exit_code == 0 &&
            std::abs(sj["value_float"]["re"].get<double>() - 1.0) <= 1e-12 &&
            sj["tail_bound"].get<double>() <= 1e-12,
        "apply szasz e_0 at 0.7 gives 1 with a reported tail bound");

  const CliRun image = run_cli(
      "apply --operator bernstein -n 2 --function poly:[\"1\",\"-8\",\"8\"]");
  const huslab::Json ij = parse_output(image);
  check(image.exit_code == 0 && ij["image"]["basis"] == "bernstein" &&
            ij["image"]["degree"] == 2,
        "apply bernstein emits the image polynomial");

  check(run_cli("apply --operator bernstein -n 2 --function nonsense")
                .exit_code == 1,
        "malformed --function exits 1");
}

void test_empirical() {
  const CliRun with_cert = run_cli(
      "empirical --operator bernstein-schurer -n 2 -p 1 --trials 100 "
      "--seed 7 --certificate");
  check(with_cert.exit_code == 0, "empirical exits 0");
  const huslab::Json j = parse_output(with_cert);
  check(std::abs(j["lower_bound"].get<double>() - 5.0) <= 5.0 * 1e-9,
        "empirical with certificate attains 5.0 within 1e-9");
  check(j["K_exact"] == "5/1", "empirical reports the closed form");

  // HUS_LAB_SEED overrides --seed
  const CliRun by_flag = run_cli(
      "empirical --operator bernstein-schurer -n 2 -p 1 --trials 50 "
      "--seed 42");
  const CliRun by_env = run_cli(
      "empirical --operator bernstein-schurer -n 2 -p 1 --trials 50 "
      "--seed 7",
      "HUS_LAB_SEED=42");
  check(by_flag.output == by_env.output,
        "HUS_LAB_SEED overrides --seed byte-identically");

  check(run_cli("empirical --operator bernstein -n 2 --trials 10")
                .exit_code == 2,
        "empirical rejects non-Schurer operators with exit 2");
}

void test_instability() {
  const CliRun lorentz = run_cli("instability --operator lorentz -n 5");
  check(lorentz.exit_code == 0, "instability lorentz exits 0");
  const huslab::Json j = parse_output(lorentz);
  check(j["max_finite_reciprocal"] == "625/24",
        "instability lorentz n=5 reports 625/24");
  check(j["spectrum"].size() == 7, "spectrum covers j = 0..n+1");

  const CliRun szasz = run_cli("instability --operator szasz-mirakjan -n 3");
  check(szasz.exit_code == 0 &&
            parse_output(szasz)["status"] == "unstable_cited",
        "instability szasz-mirakjan records the cited status");

  check(run_cli("instability --operator bernstein -n 3").exit_code == 2,
        "instability on a stable operator exits 2");
  check(run_cli("instability --operator lorentz -n 1").exit_code == 2,
        "instability lorentz n=1 exits 2");
}

} // namespace

int main(int argc, char** argv) {
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli")
      g_cli_path = argv[i + 1];
  if (g_cli_path.empty()) {
    std::fprintf(stderr, "usage: test_cli --cli /path/to/huslab\n");
    return 2;
  }

  test_constant();
  test_sweep();
  test_lorentz_rep();
  test_bound_check();
  test_apply();
  test_empirical();
  test_instability();

  if (g_failures == 0) {
    std::printf("all CLI checks passed\n");
    return 0;
  }
  std::printf("%d CLI checks FAILED\n", g_failures);
  return 1;
}
