#include "avoid/statistics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <boost/math/special_functions/gamma.hpp>

#include "avoid/error.hpp"

namespace avoid {

ChiSquare chi_square(std::span<const double> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) throw DomainError("chi_square: length mismatch");
  std::vector<std::pair<double, double>> cells;  // (expected, observed)
  for (std::size_t n = 0; n < observed.size(); ++n) cells.emplace_back(expected[n], observed[n]);
  std::sort(cells.begin(), cells.end());
  // Pool from the small end until the pooled cell reaches 5.
  std::vector<std::pair<double, double>> pooled;
  std::pair<double, double> acc{0.0, 0.0};
  std::size_t n = 0;
  for (; n < cells.size() && acc.first < 5.0; ++n) {
    acc.first += cells[n].first;
    acc.second += cells[n].second;
  }
  if (n > 0) pooled.push_back(acc);
  for (; n < cells.size(); ++n) pooled.push_back(cells[n]);
  if (pooled.size() >= 2 && pooled.front().first < 5.0) {
    pooled[1].first += pooled[0].first;
    pooled[1].second += pooled[0].second;
    pooled.erase(pooled.begin());
  }

  ChiSquare r;
  r.cells = pooled.size();
  for (const auto& [e, o] : pooled) {
    if (e > 0) {
      r.statistic += (o - e) * (o - e) / e;
    } else if (o > 0) {
      r.statistic = INFINITY;
    }
  }
  r.dof = r.cells > 1 ? static_cast<unsigned>(r.cells - 1) : 0;
  if (r.dof == 0) {
    r.p_value = 1.0;
  } else if (std::isinf(r.statistic)) {
    r.p_value = 0.0;
  } else {
    r.p_value = boost::math::gamma_q(0.5 * r.dof, 0.5 * r.statistic);
  }
  return r;
}

bool TestReport::passed() const {
  return std::all_of(tests.begin(), tests.end(), [](const TestOutcome& t) { return t.pass; });
}

TestReport faithfulness_tests(const CouplingTrace& tr, double p, const FaithfulnessParams& params) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
  const std::size_t T = tr.length();
  if (T < params.min_length || T <= params.max_lag || T < params.window) {
    throw DomainError("trace of length " + std::to_string(T) + " is too short for the configured tests (need " +
                      std::to_string(params.min_length) + ")");
  }
  if (params.window < 1 || params.window > 16) throw DomainError("window length must lie in [1, 16]");

  TestReport rep;
  rep.p = p;
  rep.rows = T;
  rep.params = params;
  const double q = 1.0 - p;
  const double sd = std::sqrt(p * q);
  std::vector<double> x(T);
  for (std::uint32_t i = 1; i <= tr.k(); ++i) {
    std::size_t ones = 0;
    for (std::size_t t = 1; t <= T; ++t) {
      ones += tr.at(t, i);
      x[t - 1] = tr.at(t, i) - p;
    }
    {
      TestOutcome o{"frequency", i};
      o.estimate = static_cast<double>(ones) / static_cast<double>(T);
      o.statistic = (static_cast<double>(ones) - static_cast<double>(T) * p) / (sd * std::sqrt(static_cast<double>(T)));
      o.threshold = params.z_threshold;
      o.pass = std::abs(o.statistic) <= params.z_threshold;
      rep.tests.push_back(o);
    }
    for (unsigned lag = 1; lag <= params.max_lag; ++lag) {
      const std::size_t pairs = T - lag;
      double s = 0.0;
      for (std::size_t t = 0; t < pairs; ++t) s += x[t] * x[t + lag];
      TestOutcome o{"autocorrelation_lag_" + std::to_string(lag), i};
      o.estimate = s / (static_cast<double>(pairs) * p * q);
      o.statistic = o.estimate * std::sqrt(static_cast<double>(pairs));
      o.threshold = params.z_threshold;
      o.pass = std::abs(o.statistic) <= params.z_threshold;
      rep.tests.push_back(o);
    }
    {
      const unsigned w = params.window;
      const std::size_t windows = T / w;
      std::vector<double> observed(std::size_t{1} << w, 0.0), expected(std::size_t{1} << w, 0.0);
      for (std::size_t n = 0; n < windows; ++n) {
        std::size_t pattern = 0;
        for (unsigned l = 0; l < w; ++l) pattern = (pattern << 1) | tr.at(n * w + l + 1, i);
        observed[pattern] += 1.0;
      }
      for (std::size_t pattern = 0; pattern < expected.size(); ++pattern) {
        int ones_in = std::popcount(pattern);
        expected[pattern] = static_cast<double>(windows) * std::pow(p, ones_in) * std::pow(q, static_cast<int>(w) - ones_in);
      }
      ChiSquare c = chi_square(observed, expected);
      TestOutcome o{"window_chi_square_w" + std::to_string(w), i};
      o.estimate = c.statistic;
      o.statistic = c.p_value;
      o.threshold = params.chi2_alpha;
      o.pass = c.p_value >= params.chi2_alpha;
      rep.tests.push_back(o);
    }
  }
  return rep;
}

ChiSquare gap_chi_square(std::span<const std::uint64_t> histogram, double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie in (0, 1)");
  double total = 0;
  for (std::size_t g = 1; g < histogram.size(); ++g) total += static_cast<double>(histogram[g]);
  if (total == 0) return ChiSquare{};
  // Bins g = 1..G while the expected count stays >= 5, then a tail g > G.
  std::vector<double> observed, expected;
  std::size_t g = 1;
  for (;; ++g) {
    double e = total * p * std::pow(1.0 - p, static_cast<double>(g - 1));
    if (e < 5.0 && g > 1) break;
    observed.push_back(g < histogram.size() ? static_cast<double>(histogram[g]) : 0.0);
    expected.push_back(e);
  }
  double tail_observed = 0.0;
  for (std::size_t h = g; h < histogram.size(); ++h) tail_observed += static_cast<double>(histogram[h]);
  observed.push_back(tail_observed);
  expected.push_back(total * std::pow(1.0 - p, static_cast<double>(g - 1)));
  return chi_square(observed, expected);
}

EmpiricalStats empirical_stats(const Seq& s, double p) {
  const std::uint32_t k = s.k();
  const std::size_t T = s.size();
  EmpiricalStats st;
  st.k = k;
  st.length = T;
  st.p = p;
  st.occurrences.assign(k + 1, 0);
  st.gap_histogram.assign(k + 1, {});
  st.weight_sum.assign(k + 1, Rational(0));
  st.weight_rate.assign(k + 1, 0.0);

  // by_b[i][b]: right neighbors of walker i whose pair has b distinct symbols between.
  std::vector<std::vector<std::uint64_t>> by_b(k + 1, std::vector<std::uint64_t>(k + 1, 0));
  std::vector<std::size_t> last(k + 1, 0);
  // stamp[x] == current marker means x was already seen in this interval.
  std::vector<std::size_t> stamp(k + 1, 0);
  std::size_t marker = 0;
  std::size_t blanks = 0;
  auto a = s.symbols();
  for (std::size_t t = 1; t <= T; ++t) {
    const std::uint32_t i = a[t - 1].index();
    if (i == 0) {
      ++blanks;
      continue;
    }
    ++st.occurrences[i];
    if (last[i] != 0) {
      const std::size_t gap = t - last[i];
      auto& hist = st.gap_histogram[i];
      if (hist.size() <= gap) hist.resize(gap + 1, 0);
      ++hist[gap];
      ++marker;
      std::uint32_t b = 0;
      for (std::size_t u = last[i] + 1; u < t; ++u) {
        std::uint32_t x = a[u - 1].index();
        if (stamp[x] != marker) {
          stamp[x] = marker;
          ++b;
        }
      }
      ++by_b[i][b];
    }
    last[i] = t;
  }

  st.blank_rate = T ? static_cast<double>(blanks) / static_cast<double>(T) : 0.0;
  st.occupancy_rate = T ? static_cast<double>(T - blanks) / static_cast<double>(T) : 0.0;
  for (std::uint32_t i = 1; i <= k; ++i) {
    double rate = 0.0;
    for (std::uint32_t b = 1; b <= k; ++b) {
      if (!by_b[i][b]) continue;
      st.weight_sum[i] += Rational(static_cast<long long>(by_b[i][b]), static_cast<long long>(b));
      rate += static_cast<double>(by_b[i][b]) / static_cast<double>(b);
    }
    st.weight_rate[i] = T ? rate / static_cast<double>(T) : 0.0;
    st.weight_total += st.weight_sum[i];
  }
  st.weight_rate_total = T ? to_double(st.weight_total) / static_cast<double>(T) : 0.0;
  st.gap_test.assign(k + 1, ChiSquare{});
  if (p > 0.0 && p < 1.0) {
    for (std::uint32_t i = 1; i <= k; ++i) st.gap_test[i] = gap_chi_square(st.gap_histogram[i], p);
  }
  return st;
}

}  // namespace avoid
