#include "avoid/feasibility.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

#include "avoid/bounds.hpp"
#include "avoid/error.hpp"
#include "avoid/simplex.hpp"

namespace avoid {

std::string_view status_name(FeasibilityStatus s) {
  switch (s) {
    case FeasibilityStatus::Feasible: return "feasible";
    case FeasibilityStatus::Infeasible: return "infeasible";
    case FeasibilityStatus::Unknown: return "unknown";
  }
  return "?";
}

FeasibilityResult solve_feasibility(const WindowLP& lp, const FeasibilityOptions& options) {
  FeasibilityResult result;
  result.tol = options.tol;

  const std::vector<double> a = lp.dense_matrix();
  const std::vector<double> b = lp.rhs_double();
  std::vector<bool> fixed(lp.windows());
  for (std::size_t w = 0; w < lp.windows(); ++w) fixed[w] = !lp.allowed(w);

  PhaseOneResult p1 = phase_one(a, b, lp.windows(), fixed);
  result.gap = p1.infeasibility;
  result.iterations = p1.iterations;
  if (result.gap > options.infeasible_margin) {
    result.status = FeasibilityStatus::Infeasible;
    return result;
  }
  // Round-off can leave tiny negative basic values.
  for (double& x : p1.x) x = std::max(x, 0.0);

  std::vector<Rational> exact;
  exact.reserve(p1.x.size());
  for (double x : p1.x) exact.push_back(exact_from_double(x));
  result.residual = to_double(exact_residual(lp, exact));
  result.witness = std::move(p1.x);
  result.status = result.residual <= options.tol ? FeasibilityStatus::Feasible : FeasibilityStatus::Unknown;
  return result;
}

bool ScanReport::any_infeasible() const {
  return std::any_of(points.begin(), points.end(),
                     [](const ScanPoint& pt) { return pt.result.status == FeasibilityStatus::Infeasible; });
}

ScanReport scan_p(std::uint32_t k, std::size_t m, const std::vector<Rational>& grid, unsigned jobs,
                  const FeasibilityOptions& options) {
  for (const auto& p : grid) {
    if (!(p > 0 && p < 1)) throw DomainError("grid point " + to_string(p) + " outside (0, 1)");
  }
  ScanReport rep;
  rep.k = k;
  rep.m = m;
  rep.analytic_max_p = max_p(k).value;
  rep.points.resize(grid.size());

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(grid.size());
  auto worker = [&] {
    for (std::size_t n = next++; n < grid.size(); n = next++) {
      try {
        ScanPoint& pt = rep.points[n];
        pt.p = grid[n];
        const double pd = to_double(grid[n]);
        pt.within_analytic_bound = k == 1 || pd <= rep.analytic_max_p;
        pt.within_trivial_bound = grid[n] * k <= 1;
        pt.result = solve_feasibility(build_window_lp(k, grid[n], m), options);
      } catch (...) {
        errors[n] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned n = 0; n < jobs; ++n) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rep;
}

namespace {

void check_grid(const std::vector<Rational>& grid) {
  for (const auto& p : grid) {
    if (p <= 0 || p >= 1) throw DomainError("grid point " + to_string(p) + " outside (0, 1)");
  }
}

}  // namespace

std::vector<Rational> parse_grid(std::string_view text) {
  std::vector<Rational> grid;
  if (text.find(':') != std::string_view::npos) {
    std::size_t c1 = text.find(':');
    std::size_t c2 = text.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw DomainError("range grid must be 'lo:hi:step'");
    Rational lo = parse_rational(text.substr(0, c1));
    Rational hi = parse_rational(text.substr(c1 + 1, c2 - c1 - 1));
    Rational step = parse_rational(text.substr(c2 + 1));
    if (step <= 0) throw DomainError("grid step must be positive");
    if (lo > hi) throw DomainError("grid range has lo > hi");
    if ((hi - lo) / step > 100000) throw DomainError("grid has too many points");
    for (Rational p = lo; p <= hi; p += step) grid.push_back(p);
    check_grid(grid);
    return grid;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    if (tok.empty()) throw DomainError("empty grid entry");
    grid.push_back(parse_rational(tok));
    pos = comma + 1;
  }
  check_grid(grid);
  return grid;
}

}  // namespace avoid
