#pragma once

#include <cstdint>

namespace avoid {

/// p (1 - p ln p): the left side of the walker-count bound, which any
/// 1-avoidance coupling of k Bernoulli(p) walkers keeps at or below 1/k.
/// Strictly increasing on (0, 1]. Throws DomainError outside (0, 1].
double feasible_pressure(double p);

struct RootResult {
  double value = 0;
  /// |feasible_pressure(value) - 1/k|
  double residual = 0;
  int iterations = 0;
};

inline constexpr double kDefaultRootTol = 1e-12;

/// Largest p with feasible_pressure(p) <= 1/k, by bisection until the
/// bracket is narrower than tol. k = 1 returns the boundary value 1.
RootResult max_p(std::uint64_t k, double tol = kDefaultRootTol);

struct WalkerBound {
  std::int64_t value = 0;
  /// n^2 / (n + ln n), the bound before rounding.
  double intermediate = 0;
  double n_minus_log_n = 0;
  /// n - ln n lies within 1e-9 of an integer, so the ceiling is not trustworthy.
  bool ambiguous = false;
};

/// ceil(n - ln n) for n >= 3. Throws DomainError for n < 3.
WalkerBound max_walkers(std::int64_t n);

/// sum_{b=1}^{N} p^2 (1-p)^b / b, increasing in N towards -p^2 ln p.
double taylor_partial(double p, std::uint64_t terms);

/// p^2 (1-p)^{N+1} / ((N+1) p): bounds |taylor_partial(p, N) + p^2 ln p|.
double taylor_tail_bound(double p, std::uint64_t terms);

}  // namespace avoid
