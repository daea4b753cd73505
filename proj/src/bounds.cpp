#include "avoid/bounds.hpp"

#include <cmath>
#include <string>

#include "avoid/error.hpp"

namespace avoid {

double feasible_pressure(double p) {
  if (!(p > 0.0 && p <= 1.0)) throw DomainError("p must lie in (0, 1], got " + std::to_string(p));
  return p * (1.0 - p * std::log(p));
}

RootResult max_p(std::uint64_t k, double tol) {
  if (!(tol > 0.0)) throw DomainError("root tolerance must be positive");
  if (k < 1) throw DomainError("walker count k must be at least 1");
  const double target = 1.0 / static_cast<double>(k);
  if (k == 1) return RootResult{1.0, 0.0, 0};

  // f(lo) < 1/k < f(hi) = 1 on the bracket.
  double lo = 0.0;
  double hi = 1.0;
  RootResult r;
  while (hi - lo > tol && r.iterations < 2000) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (feasible_pressure(mid) <= target) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++r.iterations;
  }
  r.value = lo;
  r.residual = std::abs(feasible_pressure(lo) - target);
  return r;
}

WalkerBound max_walkers(std::int64_t n) {
  if (n < 3) throw DomainError("vertex count n must be at least 3, got " + std::to_string(n));
  const double x = static_cast<double>(n);
  const double ln = std::log(x);
  WalkerBound w;
  w.n_minus_log_n = x - ln;
  w.intermediate = x * x / (x + ln);
  w.value = static_cast<std::int64_t>(std::ceil(w.n_minus_log_n));
  w.ambiguous = std::abs(w.n_minus_log_n - std::round(w.n_minus_log_n)) < 1e-9;
  return w;
}

double taylor_partial(double p, std::uint64_t terms) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1), got " + std::to_string(p));
  if (terms < 1) throw DomainError("number of terms must be at least 1");
  double sum = 0.0;
  double power = p * p;
  for (std::uint64_t b = 1; b <= terms; ++b) {
    power *= 1.0 - p;
    if (power == 0.0) break;
    sum += power / static_cast<double>(b);
  }
  return sum;
}

double taylor_tail_bound(double p, std::uint64_t terms) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1), got " + std::to_string(p));
  const double n1 = static_cast<double>(terms) + 1.0;
  return p * p * std::pow(1.0 - p, n1) / (n1 * p);
}

}  // namespace avoid
