#include <doctest.h>
#include <json.hpp>

#include "avoid/error.hpp"
#include "avoid/report.hpp"

using namespace avoid;
using nlohmann::json;

namespace {

RunInfo run() {
  RunInfo r;
  r.command = "weights";
  r.seed = 17;
  r.flags = {{"k", "3"}, {"format", "json"}};
  return r;
}

}  // namespace

TEST_CASE("weight report as json") {
  Seq s = parse_seq("1 3 B 2 3 3 B 3 B 1 B 2 B 1 3", 3);
  json j = json::parse(write_report(s, total_weight(s), Format::Json, run()));
  CHECK(j["total"] == "3/1");
  CHECK(j["blanks"] == 5);
  CHECK(j["meta"]["tool"] == "avoidctl");
  CHECK(j["meta"]["version"] == std::string(kToolVersion));
  CHECK(j["meta"]["seed"] == 17);
  CHECK(j["meta"]["flags"]["k"] == "3");
  CHECK(j["meta"]["command"] == "weights");
}

TEST_CASE("field order is stable") {
  Seq s = parse_seq("1 B 1", 1);
  const std::string a = write_report(s, total_weight(s), Format::Json, run());
  CHECK(a == write_report(s, total_weight(s), Format::Json, run()));
  CHECK(a.find("\"meta\"") < a.find("\"total\""));
}

TEST_CASE("empty violation report prints OK") {
  ViolationReport empty;
  empty.rows = 10;
  CHECK(write_report(empty, Format::Text, run()) == "OK\n");
  json j = json::parse(write_report(empty, Format::Json, run()));
  CHECK(j["ok"] == true);
}

TEST_CASE("scan report as csv") {
  ScanReport r = scan_p(2, 1, parse_grid("0.25,0.6"));
  RunInfo info = run();
  info.command = "lp-scan";
  const std::string csv = write_report(r, Format::Csv, info);
  CHECK(csv.rfind("# avoidctl ", 0) == 0);
  CHECK(csv.find("seed=17") != std::string::npos);
  const auto header = csv.find('\n') + 1;
  CHECK(csv.substr(header).rfind("p,status,analytic_maxp_verdict", 0) == 0);
  CHECK(csv.find("\n0.25,feasible,") != std::string::npos);
  CHECK(csv.find("\n0.6,infeasible,") != std::string::npos);
}

TEST_CASE("csv decimals carry twelve significant digits") {
  CHECK(decimal12(1.0 / 3) == "0.333333333333");
  CHECK(decimal12(0.25) == "0.25");
  CHECK(decimal12(18) == "18");
}

TEST_CASE("format names") {
  CHECK(parse_format("json") == Format::Json);
  CHECK(parse_format("csv") == Format::Csv);
  CHECK(parse_format("text") == Format::Text);
  CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("rationals") {
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(to_string(Rational(-2, 4)) == "-1/2");
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational("-1.25e-2") == Rational(-1, 80));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(exact_from_double(0.5) == Rational(1, 2));
  CHECK(exact_from_double(0.1) != Rational(1, 10));
  CHECK(to_double(exact_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}
