#include "avoid/simplex.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "avoid/error.hpp"
#include "avoid/kernels.hpp"

namespace avoid {

PhaseOneResult phase_one(std::span<const double> a, std::span<const double> b, std::size_t cols,
                         const std::vector<bool>& fixed_zero, const SimplexOptions& options) {
  const std::size_t rows = b.size();
  if (a.size() != rows * cols || fixed_zero.size() != cols) throw DomainError("phase_one: shape mismatch");

  // Tableau columns: structural (only free ones), one artificial per row, rhs.
  std::vector<std::size_t> structural;
  for (std::size_t j = 0; j < cols; ++j) {
    if (!fixed_zero[j]) structural.push_back(j);
  }
  const std::size_t ns = structural.size();
  const std::size_t width = ns + rows + 1;
  const std::size_t rhs = width - 1;
  std::vector<double> tab((rows + 1) * width, 0.0);
  auto row_span = [&](std::size_t r) { return std::span<double>(tab).subspan(r * width, width); };

  for (std::size_t r = 0; r < rows; ++r) {
    const double sign = b[r] < 0 ? -1.0 : 1.0;
    auto t = row_span(r);
    for (std::size_t c = 0; c < ns; ++c) t[c] = sign * a[r * cols + structural[c]];
    t[ns + r] = 1.0;
    t[rhs] = sign * b[r];
  }
  // Objective row holds reduced costs of sum(artificials): -(column sums) on structurals.
  auto obj = row_span(rows);
  for (std::size_t r = 0; r < rows; ++r) kernels::sub_scaled(1.0, row_span(r), obj);
  for (std::size_t r = 0; r < rows; ++r) obj[ns + r] = 0.0;

  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = ns + r;

  const std::size_t limit = options.max_iterations ? options.max_iterations : 50 * (rows + width);
  PhaseOneResult result;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t c = 0; c < rhs; ++c) {
      if (obj[c] < -options.cost_tol) {
        enter = c;
        break;
      }
    }
    if (enter == width) break;
    if (result.iterations >= limit) {
      throw BudgetError("phase-one simplex hit its iteration limit of " + std::to_string(limit));
    }

    // Minimum ratio, ties broken by the smallest basic index (Bland).
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = tab[r * width + enter];
      if (coef > options.pivot_tol) best = std::min(best, tab[r * width + rhs] / coef);
    }
    std::size_t leave = rows;
    for (std::size_t r = 0; r < rows; ++r) {
      const double coef = tab[r * width + enter];
      if (coef <= options.pivot_tol) continue;
      if (tab[r * width + rhs] / coef <= best + 1e-14 && (leave == rows || basis[r] < basis[leave])) leave = r;
    }
    if (leave == rows) {
      // No admissible pivot in this column (only round-off makes it look improving).
      obj[enter] = 0.0;
      continue;
    }

    auto pivot_row = row_span(leave);
    const double pivot = pivot_row[enter];
    for (double& v : pivot_row) v /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave) continue;
      const double factor = tab[r * width + enter];
      if (factor != 0.0) kernels::sub_scaled(factor, pivot_row, row_span(r));
    }
    basis[leave] = enter;
    ++result.iterations;
  }

  result.x.assign(cols, 0.0);
  double artificial = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    const double value = tab[r * width + rhs];
    if (basis[r] < ns) {
      result.x[structural[basis[r]]] = value;
    } else {
      artificial += std::abs(value);
    }
  }
  result.infeasibility = artificial;
  return result;
}

}  // namespace avoid
