#include <cmath>

#include <doctest.h>

#include "avoid/error.hpp"
#include "avoid/feasibility.hpp"
#include "avoid/simplex.hpp"
#include "avoid/window_lp.hpp"

using namespace avoid;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Rational rat(const char* s) { return parse_rational(s); }

}  // namespace

TEST_CASE("instance shape") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 4; ++m) {
      WindowLP lp = build_window_lp(k, rat("0.2"), m);
      CHECK(lp.windows() == ipow(k + 1, m));
      CHECK(lp.rows().size() == 1 + ipow(k + 1, m - 1) + k * ipow(2, m));
      for (const auto& row : lp.rows())
        for (auto [w, c] : row.terms) CHECK((c == 1 || c == -1));
    }
  }
}

TEST_CASE("window indexing") {
  WindowLP lp = build_window_lp(2, rat("0.2"), 3);
  for (std::size_t w = 0; w < lp.windows(); ++w) CHECK(lp.index_of(lp.window(w)) == w);
  CHECK(lp.window_label(0) == "BBB");
  CHECK(lp.window_label(lp.windows() - 1) == "222");
  std::vector<std::uint32_t> w21b{2, 1, 0};
  CHECK_FALSE(lp.allowed(lp.index_of(w21b)));
  std::vector<std::uint32_t> w2b1{2, 0, 1};
  CHECK(lp.allowed(lp.index_of(w2b1)));
}

TEST_CASE("k=1, m=2 faithfulness rows are the product law") {
  WindowLP lp = build_window_lp(1, rat("3/10"), 2);
  CHECK(lp.windows() == 4);
  int faith = 0;
  for (const auto& row : lp.rows()) {
    if (row.kind != LinearRow::Kind::Faithfulness) continue;
    ++faith;
    REQUIRE(row.terms.size() == 1);
    const auto w = lp.window(row.terms[0].first);
    Rational expect = 1;
    for (auto x : w) expect *= x ? rat("3/10") : rat("7/10");
    CHECK(row.rhs == expect);
  }
  CHECK(faith == 4);
}

TEST_CASE("k=2, m=1 pins the occupancy") {
  WindowLP lp = build_window_lp(2, rat("0.3"), 1);
  FeasibilityResult r = solve_feasibility(lp);
  REQUIRE(r.status == FeasibilityStatus::Feasible);
  CHECK(r.witness[0] == doctest::Approx(0.4));
  CHECK(r.witness[1] == doctest::Approx(0.3));
  CHECK(r.witness[2] == doctest::Approx(0.3));
}

TEST_CASE("k=2, m=2 forbids the descent 21") {
  WindowLP lp = build_window_lp(2, rat("0.2"), 2);
  CHECK(lp.windows() == 9);
  std::vector<std::uint32_t> w{2, 1};
  const std::size_t idx = lp.index_of(w);
  CHECK_FALSE(lp.allowed(idx));
  FeasibilityResult r = solve_feasibility(lp);
  REQUIRE(r.status == FeasibilityStatus::Feasible);
  CHECK(r.witness[idx] == 0);
}

TEST_CASE("product witness is exact for one walker") {
  for (const char* p : {"0.3", "1/7", "0.9"}) {
    for (std::size_t m = 1; m <= 4; ++m) {
      WindowLP lp = build_window_lp(1, rat(p), m);
      auto q = product_witness(lp);
      CHECK(exact_residual(lp, q) == 0);
      FeasibilityResult r = solve_feasibility(lp);
      CHECK(r.status == FeasibilityStatus::Feasible);
      CHECK(r.residual <= 1e-9);
    }
  }
  CHECK_THROWS_AS(product_witness(build_window_lp(2, rat("0.3"), 2)), DomainError);
}

TEST_CASE("exact residual detects violations") {
  WindowLP lp = build_window_lp(1, rat("0.3"), 2);
  auto q = product_witness(lp);
  q[0] += Rational(1, 100);
  CHECK(exact_residual(lp, q) == Rational(1, 100));
  q = product_witness(lp);
  q[0] = -q[0];
  CHECK(exact_residual(lp, q) > 0);
}

TEST_CASE("above the trivial bound nothing is feasible") {
  for (std::uint32_t k = 2; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 3; ++m) {
      Rational p = Rational(1, k) + Rational(1, 100);
      CHECK(solve_feasibility(build_window_lp(k, p, m)).status == FeasibilityStatus::Infeasible);
    }
  }
  FeasibilityResult r = solve_feasibility(build_window_lp(2, rat("0.51"), 1));
  CHECK(r.status == FeasibilityStatus::Infeasible);
  CHECK(r.gap > 1e-6);
}

TEST_CASE("achievable densities stay feasible") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (const char* p : {"1/8", "0.1", "0.05", "0.01"}) {
      FeasibilityResult r = solve_feasibility(build_window_lp(2, rat(p), m));
      CHECK_MESSAGE(r.status == FeasibilityStatus::Feasible, "m=" << m << " p=" << p);
    }
  }
}

TEST_CASE("witnesses marginalize to witnesses of shorter windows") {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    const Rational p = Rational(1, 4 * k);
    WindowLP lp3 = build_window_lp(k, p, 3);
    FeasibilityResult r = solve_feasibility(lp3);
    REQUIRE(r.status == FeasibilityStatus::Feasible);
    auto q2 = marginalize_last(lp3, r.witness);
    WindowLP lp2 = build_window_lp(k, p, 2);
    CHECK(residual(lp2, q2) <= 1e-9);
    auto q1 = marginalize_last(lp2, q2);
    CHECK(residual(build_window_lp(k, p, 1), q1) <= 1e-9);
  }
  WindowLP lp = build_window_lp(1, rat("0.3"), 3);
  auto exact = marginalize_last(lp, product_witness(lp));
  WindowLP lp2 = build_window_lp(1, rat("0.3"), 2);
  CHECK(exact_residual(lp2, exact) == 0);
}

TEST_CASE("relaxation at m=3 cuts below the analytic bound for two walkers") {
  // cross-checked against an external LP solver
  CHECK(solve_feasibility(build_window_lp(2, rat("0.34"), 3)).status == FeasibilityStatus::Feasible);
  CHECK(solve_feasibility(build_window_lp(2, rat("0.36"), 3)).status == FeasibilityStatus::Infeasible);
  CHECK(solve_feasibility(build_window_lp(2, rat("0.36"), 2)).status == FeasibilityStatus::Feasible);
}

TEST_CASE("scan") {
  ScanReport r = scan_p(2, 1, parse_grid("0.1,0.2,0.3,0.4,0.5,0.51"), 2);
  REQUIRE(r.points.size() == 6);
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.points[i].result.status == FeasibilityStatus::Feasible);
  CHECK(r.points[5].result.status == FeasibilityStatus::Infeasible);
  CHECK(r.any_infeasible());
  CHECK(r.points[2].within_analytic_bound);
  CHECK_FALSE(r.points[3].within_analytic_bound);
  CHECK(r.points[4].within_trivial_bound);
  CHECK_FALSE(r.points[5].within_trivial_bound);

  ScanReport one = scan_p(1, 4, parse_grid("0.05:0.95:0.05"), 1);
  CHECK(one.points.size() == 19);
  CHECK_FALSE(one.any_infeasible());
  ScanReport again = scan_p(1, 4, parse_grid("0.05:0.95:0.05"), 3);
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    CHECK(one.points[i].p == again.points[i].p);
    CHECK(one.points[i].result.witness == again.points[i].result.witness);
  }
}

TEST_CASE("grid parsing") {
  auto g = parse_grid("0.1:0.3:0.1");
  REQUIRE(g.size() == 3);
  CHECK(g[2] == rat("3/10"));
  CHECK(parse_grid("1/8, 0.2").size() == 2);
  CHECK_THROWS_AS(parse_grid("0.3:0.1:0.1"), DomainError);
  CHECK_THROWS_AS(parse_grid("0"), DomainError);
  CHECK_THROWS_AS(parse_grid("1.2"), DomainError);
  CHECK_THROWS_AS(parse_grid(""), DomainError);
}

TEST_CASE("builder errors") {
  CHECK_THROWS_AS(build_window_lp(0, rat("0.2"), 2), DomainError);
  CHECK_THROWS_AS(build_window_lp(2, rat("0"), 2), DomainError);
  CHECK_THROWS_AS(build_window_lp(2, rat("1"), 2), DomainError);
  CHECK_THROWS_AS(build_window_lp(2, rat("0.2"), 0), DomainError);
  CHECK_THROWS_AS(build_window_lp(4, rat("0.2"), 6), BudgetError);
}

TEST_CASE("mps export") {
  WindowLP lp = build_window_lp(2, rat("1/8"), 2);
  const std::string mps = export_mps(lp);
  CHECK(mps.rfind("NAME", 0) == 0);
  CHECK(mps.find("ROWS") != std::string::npos);
  CHECK(mps.find("RHS") != std::string::npos);
  CHECK(mps.find(" FX bnd  q_21 ") != std::string::npos);
  CHECK(mps.find("ENDATA") != std::string::npos);
  std::size_t eq = 0;
  for (std::size_t at = 0; (at = mps.find("\n E  ", at)) != std::string::npos; ++at) ++eq;
  CHECK(eq == lp.rows().size());
  CHECK(export_mps(lp) == mps);
}

TEST_CASE("phase one on small systems") {
  // x + y = 1, x - y = 0
  std::vector<double> a{1, 1, 1, -1}, b{1, 0};
  PhaseOneResult r = phase_one(a, b, 2, {false, false});
  CHECK(r.infeasibility == doctest::Approx(0).epsilon(1e-12));
  CHECK(r.x[0] == doctest::Approx(0.5));
  CHECK(r.x[1] == doctest::Approx(0.5));

  // x + y = 1, x - y = 3 needs y = -1
  std::vector<double> b2{1, 3};
  CHECK(phase_one(a, b2, 2, {false, false}).infeasibility > 0.5);

  // fixing x at zero leaves y = 1 and y = 0
  CHECK(phase_one(a, b, 2, {true, false}).infeasibility > 0.5);

  // negative right-hand side
  std::vector<double> a3{-1, -1}, b3{-2};
  r = phase_one(a3, b3, 2, {false, false});
  CHECK(r.infeasibility == doctest::Approx(0));
  CHECK(r.x[0] + r.x[1] == doctest::Approx(2));
}
