#include <doctest.h>
#include <json.hpp>

#include "cli_runner.hpp"

using nlohmann::json;

namespace {

cli::Result avoidctl(const std::string& args) { return cli::run(AVOID_CLI_PATH, args); }

}  // namespace

TEST_CASE("bound") {
  auto r = avoidctl("bound --n 21");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "18\n");
  CHECK(avoidctl("bound --n 2").exit_code == 2);
  json j = json::parse(avoidctl("bound --n 21 --format json").out);
  CHECK(j["max_walkers"] == 18);
  CHECK(j["n_minus_2"] == 19);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(avoidctl("").exit_code == 2);
  CHECK(avoidctl("frobnicate").exit_code == 2);
  CHECK(avoidctl("bound").exit_code == 2);
  CHECK(avoidctl("bound --n x").exit_code == 2);
  CHECK(avoidctl("weights --k 2 --seq '1 3'").exit_code == 2);
  CHECK(avoidctl("weights --k 2 --in /nonexistent/file").exit_code == 2);
  CHECK(avoidctl("maxp --k 2 --format yaml").exit_code == 2);
  CHECK(avoidctl("lp-scan --k 2 --m 1 --grid 2").exit_code == 2);
  CHECK(avoidctl("--help").exit_code == 0);
}

TEST_CASE("weights from stdin") {
  const std::string seq = "1 3 B 2 3 3 B 3 B 1 B 2 B 1 3\n";
  auto r = cli::run(AVOID_CLI_PATH, "weights --k 3 --in - --format json", &seq);
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["total"] == "3/1");
  CHECK(j["blanks"] == 5);
}

TEST_CASE("verify-lemma") {
  auto r = avoidctl("verify-lemma --k 2 --max-len 8 --format json");
  CHECK(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["counterexample_count"] == 0);
  CHECK(j["certificate_failure_count"] == 0);
  CHECK(j["meta"]["flags"]["max-len"] == "8");
}

TEST_CASE("reduce and verify a certificate") {
  const std::string dir = "/tmp/avoidctl_cli_test_cert";
  auto r = avoidctl("reduce --k 3 --seq '1 3 B 2 3 3 B 3 B 1 B 2 B 1 3' --out " + dir);
  CHECK(r.exit_code == 0);
  r = avoidctl("reduce --verify --in " + dir);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "OK 3/1 <= 5\n");
  CHECK(avoidctl("reduce --k 2 --seq '2 1'").exit_code == 1);
  std::remove(dir.c_str());
}

TEST_CASE("maxp and taylor") {
  auto r = avoidctl("maxp --k 2");
  CHECK(r.exit_code == 0);
  const double v = std::stod(r.out);
  CHECK(v > 0.365);
  CHECK(v < 0.366);
  r = avoidctl("taylor --p 0.5 --N 1");
  CHECK(std::stod(r.out) == doctest::Approx(0.125));
}

TEST_CASE("simulate then check") {
  const std::string path = "/tmp/avoidctl_cli_test_trace";
  CHECK(avoidctl("simulate --policy trivial --p 0.3 --T 20000 --seed 4 --out " + path).exit_code == 0);
  auto r = avoidctl("check-trace --in " + path + " --p 0.3");
  CHECK(r.exit_code == 0);
  r = avoidctl("stats --in " + path + " --p 0.3 --format json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["length"] == 20000);

  CHECK(avoidctl("simulate --policy independent --k 2 --p 0.3 --T 20000 --out " + path).exit_code == 0);
  CHECK(avoidctl("check-trace --in " + path).exit_code == 1);

  CHECK(avoidctl("simulate --policy walkers --n 6 --k 3 --T 500 --out " + path).exit_code == 0);
  r = avoidctl("check-trace --in " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "OK\n");
  std::remove(path.c_str());

  CHECK(avoidctl("simulate --policy nope --T 5").exit_code == 2);
}

TEST_CASE("simulation output depends only on the seed") {
  const std::string args = "simulate --policy walkers --n 5 --k 1 --waves --T 2000 --seed 99";
  auto a = avoidctl(args), b = avoidctl(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out != avoidctl("simulate --policy walkers --n 5 --k 1 --waves --T 2000 --seed 98").out);
}

TEST_CASE("lp commands") {
  auto r = avoidctl("lp-build --k 2 --p 1/8 --m 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.rfind("NAME", 0) == 0);
  r = avoidctl("lp-scan --k 2 --m 1 --grid 0.1,0.51 --format csv");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("p,status,analytic_maxp_verdict") != std::string::npos);
  CHECK(avoidctl("lp-scan --k 2 --m 3 --grid 1/8").exit_code == 0);
}
