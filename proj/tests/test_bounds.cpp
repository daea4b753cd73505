#include <cmath>

#include <doctest.h>

#include "avoid/bounds.hpp"
#include "avoid/error.hpp"
#include "oracle.hpp"

using namespace avoid;

TEST_CASE("feasible pressure") {
  CHECK(feasible_pressure(1.0) == doctest::Approx(1.0));
  CHECK(feasible_pressure(0.5) == doctest::Approx(0.5 * (1 + 0.5 * std::log(2.0))));
  double prev = 0;
  for (int i = 1; i <= 1000; ++i) {
    const double v = feasible_pressure(i / 1000.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK_THROWS_AS(feasible_pressure(0.0), DomainError);
  CHECK_THROWS_AS(feasible_pressure(1.5), DomainError);
  CHECK_THROWS_AS(feasible_pressure(std::nan("")), DomainError);
}

TEST_CASE("max_p for two walkers") {
  RootResult r = max_p(2);
  CHECK(r.value > 0.365);
  CHECK(r.value < 0.366);
  CHECK(std::abs(feasible_pressure(r.value) - 0.5) < 1e-9);
  CHECK(r.residual < 1e-9);
  CHECK(feasible_pressure(r.value) <= 0.5);
}

TEST_CASE("max_p agrees with a fine grid scan") {
  for (int k = 2; k <= 12; ++k) {
    const double scan = oracle::max_p_scan(k, 1e-6);
    RootResult r = max_p(static_cast<std::uint64_t>(k));
    CHECK(std::abs(r.value - scan) <= 1e-6);
    CHECK(r.value <= 1.0 / k);
    CHECK(feasible_pressure(r.value) <= 1.0 / k);
  }
  CHECK(max_p(1).value == 1.0);
  CHECK_THROWS_AS(max_p(0), DomainError);
  CHECK_THROWS_AS(max_p(2, 0.0), DomainError);
}

TEST_CASE("max_p decreases in k") {
  double prev = 1.0;
  for (std::uint64_t k = 2; k <= 200; ++k) {
    const double v = max_p(k).value;
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("walker bound") {
  WalkerBound b = max_walkers(21);
  CHECK(b.value == 18);
  CHECK(b.value < 19);
  CHECK_FALSE(b.ambiguous);
  CHECK(b.intermediate == doctest::Approx(441.0 / (21 + std::log(21.0))));
  CHECK(max_walkers(3).value == 2);
  CHECK_THROWS_AS(max_walkers(2), DomainError);
  CHECK_THROWS_AS(max_walkers(-5), DomainError);

  for (std::int64_t n = 3; n <= 2000; ++n) {
    const long double x = static_cast<long double>(n) - std::log(static_cast<long double>(n));
    CHECK(max_walkers(n).value == static_cast<std::int64_t>(std::ceil(x)));
  }
  // the bound beats n - 2 from n = 21 on, and not before
  CHECK(max_walkers(20).value == 18);
  for (std::int64_t n = 21; n <= 1000000; ++n) {
    if (max_walkers(n).value >= n - 2) {
      FAIL("bound not below n - 2 at n = " << n);
      break;
    }
  }
}

TEST_CASE("taylor partial sums") {
  for (int i = 1; i <= 9; ++i) {
    const double p = i / 10.0;
    CHECK(std::abs(taylor_partial(p, 10000) + p * p * std::log(p)) < 1e-6);
    double prev = 0;
    for (std::uint64_t n = 1; n <= 50; ++n) {
      const double s = taylor_partial(p, n);
      CHECK(s >= prev);
      CHECK(std::abs(s + p * p * std::log(p)) <= taylor_tail_bound(p, n) * (1 + 1e-12) + 1e-15);
      prev = s;
    }
  }
  CHECK(taylor_partial(0.5, 1) == doctest::Approx(0.125));
  CHECK_THROWS_AS(taylor_partial(0.0, 10), DomainError);
  CHECK_THROWS_AS(taylor_partial(0.5, 0), DomainError);
}
