#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace avoid {

struct SimplexOptions {
  /// Reduced costs above -cost_tol count as nonnegative.
  double cost_tol = 1e-11;
  /// Smallest admissible pivot magnitude.
  double pivot_tol = 1e-9;
  /// Zero means 50 * (rows + columns).
  std::size_t max_iterations = 0;
};

struct PhaseOneResult {
  /// Minimum of the summed artificial variables.
  double infeasibility = 0;
  std::vector<double> x;
  std::size_t iterations = 0;
};

/// Minimizes the total violation of A x = b, x >= 0 by the textbook
/// phase-one simplex on a dense tableau with Bland's rule. `a` is row-major
/// rows x cols; columns with `fixed_zero[j]` set are excluded. Throws
/// BudgetError at the iteration limit.
PhaseOneResult phase_one(std::span<const double> a, std::span<const double> b, std::size_t cols,
                         const std::vector<bool>& fixed_zero, const SimplexOptions& options = {});

}  // namespace avoid
