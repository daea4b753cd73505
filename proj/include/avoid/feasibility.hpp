#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "avoid/rational.hpp"
#include "avoid/window_lp.hpp"

namespace avoid {

enum class FeasibilityStatus { Feasible, Infeasible, Unknown };

std::string_view status_name(FeasibilityStatus s);

struct FeasibilityOptions {
  /// Witness residual accepted as feasible, re-verified in exact arithmetic.
  double tol = 1e-9;
  /// Phase-one optimum above which the instance is declared infeasible;
  /// values between tol and this margin are reported as Unknown.
  double infeasible_margin = 1e-6;
};

struct FeasibilityResult {
  FeasibilityStatus status = FeasibilityStatus::Unknown;
  /// Present for Feasible (and for Unknown when a candidate was found).
  std::vector<double> witness;
  /// Max constraint violation of the witness, computed exactly.
  double residual = 0;
  /// Phase-one optimum: total violation the solver could not remove.
  double gap = 0;
  double tol = 0;
  std::size_t iterations = 0;
};

FeasibilityResult solve_feasibility(const WindowLP& lp, const FeasibilityOptions& options = {});

struct ScanPoint {
  Rational p;
  FeasibilityResult result;
  /// p <= max_p(k), the analytic bound p (1 - p ln p) <= 1/k.
  bool within_analytic_bound = false;
  /// p <= 1/k.
  bool within_trivial_bound = false;
};

struct ScanReport {
  std::uint32_t k = 1;
  std::size_t m = 1;
  double analytic_max_p = 0;
  std::vector<ScanPoint> points;

  bool any_infeasible() const;
};

/// Solves every grid point (no monotonicity in p is assumed), optionally on
/// several threads; the report keeps grid order.
ScanReport scan_p(std::uint32_t k, std::size_t m, const std::vector<Rational>& grid, unsigned jobs = 1,
                  const FeasibilityOptions& options = {});

/// "a,b,c" or "lo:hi:step" (inclusive, exact decimal steps). Throws DomainError.
std::vector<Rational> parse_grid(std::string_view text);

}  // namespace avoid
