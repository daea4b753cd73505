#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "avoid/rational.hpp"
#include "avoid/sequence.hpp"
#include "avoid/trace.hpp"

namespace avoid {

struct ChiSquare {
  double statistic = 0;
  unsigned dof = 0;
  double p_value = 1;
  /// Cells after pooling those with expected count below 5.
  std::size_t cells = 0;
};

/// Pearson chi-square against expected counts. Cells with expected count
/// below 5 are pooled (smallest first) before the statistic is formed;
/// dof = cells - 1.
ChiSquare chi_square(std::span<const double> observed, std::span<const double> expected);

struct FaithfulnessParams {
  double z_threshold = 4.0;
  unsigned max_lag = 16;
  unsigned window = 4;
  double chi2_alpha = 1e-3;
  std::size_t min_length = 10000;
};

struct TestOutcome {
  std::string name;
  std::uint32_t walker = 0;
  /// Observed frequency, lag autocorrelation, or chi-square statistic.
  double estimate = 0;
  /// z-score, or chi-square p-value.
  double statistic = 0;
  double threshold = 0;
  bool pass = false;
};

struct TestReport {
  double p = 0;
  std::size_t rows = 0;
  FaithfulnessParams params;
  std::vector<TestOutcome> tests;

  bool passed() const;
};

/// Per walker: frequency z-test against p, lag-l autocorrelation z-tests
/// (l = 1..max_lag) against 0, and a chi-square of non-overlapping
/// window patterns against the product law. Throws DomainError when the
/// trace is shorter than params.min_length or p is outside (0, 1).
TestReport faithfulness_tests(const CouplingTrace& tr, double p, const FaithfulnessParams& params = {});

struct EmpiricalStats {
  std::uint32_t k = 1;
  std::size_t length = 0;
  double p = 0;
  double blank_rate = 0;
  double occupancy_rate = 0;
  std::vector<std::uint64_t> occurrences;  // indexed by walker, entry 0 unused
  /// gap_histogram[i][g] counts successive occurrences of walker i at distance g >= 1.
  std::vector<std::vector<std::uint64_t>> gap_histogram;
  std::vector<ChiSquare> gap_test;
  /// sum_t w_i(t), exactly.
  std::vector<Rational> weight_sum;
  std::vector<double> weight_rate;
  Rational weight_total;
  double weight_rate_total = 0;
};

/// Blank rate, occupancy, gap histograms (tested against p(1-p)^b at gap b+1)
/// and time-indexed weights w_i(t): 1/b at the right neighbor of a pair with
/// b >= 1 distinct symbols between, zero at first occurrences, immediate
/// repeats and blanks.
EmpiricalStats empirical_stats(const Seq& s, double p);

/// Geometric gap law: expected counts for gaps 1, 2, ... plus a tail bin.
ChiSquare gap_chi_square(std::span<const std::uint64_t> histogram, double p);

}  // namespace avoid
