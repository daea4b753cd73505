#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "avoid/rational.hpp"

namespace avoid {

/// One equality row: sum of coefficient * q(window) = rhs.
struct LinearRow {
  enum class Kind { Normalization, Shift, Faithfulness };
  Kind kind;
  std::string name;
  /// (window index, coefficient), sorted by index, no zero coefficients.
  std::vector<std::pair<std::size_t, int>> terms;
  Rational rhs;
};

/// Linear feasibility system over length-m window frequencies q(w), w in
/// ([k] ∪ {B})^m, that the time-averaged window statistics of every
/// 1-avoidance coupling of k Bernoulli(p) walkers satisfy:
///   normalization   sum_w q(w) = 1
///   shift           sum_x q(x v) = sum_y q(v y) for every v of length m-1
///   faithfulness    for each walker i and pattern s in {0,1}^m,
///                   sum over w with indicator_i(w) = s of q(w) = p^|s| (1-p)^(m-|s|)
///   support         q(w) = 0 when w has adjacent walker symbols a > a'
/// Windows are indexed lexicographically (B < 1 < ... < k, first position
/// most significant). Rows appear in the order listed above; shift rows by
/// v and faithfulness rows by (i, s) lexicographically with 0 < 1.
class WindowLP {
 public:
  std::uint32_t k() const { return k_; }
  std::size_t m() const { return m_; }
  const Rational& p() const { return p_; }
  std::size_t windows() const { return allowed_.size(); }
  bool allowed(std::size_t w) const { return allowed_[w]; }
  const std::vector<LinearRow>& rows() const { return rows_; }

  /// Symbols of window w: 0 = B, 1..k walkers.
  std::vector<std::uint32_t> window(std::size_t w) const;
  std::size_t index_of(std::span<const std::uint32_t> symbols) const;
  /// e.g. "B12" for k < 10, "B.1.12" otherwise.
  std::string window_label(std::size_t w) const;

  /// Dense coefficient matrix, rows() order, windows() columns.
  std::vector<double> dense_matrix() const;
  std::vector<double> rhs_double() const;

  friend WindowLP build_window_lp(std::uint32_t k, const Rational& p, std::size_t m, std::size_t max_windows);

 private:
  std::uint32_t k_ = 1;
  std::size_t m_ = 1;
  Rational p_;
  std::vector<bool> allowed_;
  std::vector<LinearRow> rows_;
};

inline constexpr std::size_t kDefaultMaxWindows = 4096;

/// Throws DomainError for k < 1, m < 1 or p outside (0, 1); BudgetError if
/// (k+1)^m exceeds max_windows.
WindowLP build_window_lp(std::uint32_t k, const Rational& p, std::size_t m,
                         std::size_t max_windows = kDefaultMaxWindows);

/// Largest |row activity - rhs| over all rows, plus any negative entry or
/// mass on a forbidden window. Exact.
Rational exact_residual(const WindowLP& lp, std::span<const Rational> q);
/// Same in floating point; row activities go through kernels::dot.
double residual(const WindowLP& lp, std::span<const double> q);

/// Sums out the last symbol: a length-m witness becomes a length-(m-1) one.
std::vector<double> marginalize_last(const WindowLP& lp, std::span<const double> q);
std::vector<Rational> marginalize_last(const WindowLP& lp, std::span<const Rational> q);

/// q(w) = prod over positions of p (walker) or 1-p (blank): the window law
/// of a single i.i.d. walker. Throws DomainError unless k = 1.
std::vector<Rational> product_witness(const WindowLP& lp);

/// Free-format MPS: zero objective, one E row per equality, FX 0 bounds
/// for forbidden windows. Right-hand sides printed with 17 significant digits.
std::string export_mps(const WindowLP& lp);

}  // namespace avoid
