#include "avoid/window_lp.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <map>

#include "avoid/error.hpp"
#include "avoid/kernels.hpp"

namespace avoid {

std::vector<std::uint32_t> WindowLP::window(std::size_t w) const {
  std::vector<std::uint32_t> symbols(m_);
  for (std::size_t pos = m_; pos-- > 0;) {
    symbols[pos] = static_cast<std::uint32_t>(w % (k_ + 1));
    w /= k_ + 1;
  }
  return symbols;
}

std::size_t WindowLP::index_of(std::span<const std::uint32_t> symbols) const {
  std::size_t w = 0;
  for (std::uint32_t x : symbols) w = w * (k_ + 1) + x;
  return w;
}

std::string WindowLP::window_label(std::size_t w) const {
  std::string out;
  auto symbols = window(w);
  for (std::size_t pos = 0; pos < symbols.size(); ++pos) {
    if (k_ >= 10 && pos) out += '.';
    out += symbols[pos] == 0 ? std::string("B") : std::to_string(symbols[pos]);
  }
  return out;
}

std::vector<double> WindowLP::dense_matrix() const {
  std::vector<double> a(rows_.size() * windows(), 0.0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (auto [w, c] : rows_[r].terms) a[r * windows() + w] = c;
  }
  return a;
}

std::vector<double> WindowLP::rhs_double() const {
  std::vector<double> b;
  b.reserve(rows_.size());
  for (const auto& row : rows_) b.push_back(to_double(row.rhs));
  return b;
}

namespace {

LinearRow make_row(LinearRow::Kind kind, std::string name, const std::map<std::size_t, int>& coef, Rational rhs) {
  LinearRow row{kind, std::move(name), {}, std::move(rhs)};
  for (auto [w, c] : coef) {
    if (c != 0) row.terms.emplace_back(w, c);
  }
  return row;
}

Rational rational_pow(const Rational& base, std::size_t e) {
  Rational r = 1;
  for (std::size_t n = 0; n < e; ++n) r *= base;
  return r;
}

}  // namespace

WindowLP build_window_lp(std::uint32_t k, const Rational& p, std::size_t m, std::size_t max_windows) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
  if (m < 1) throw DomainError("window length m must be at least 1");
  if (!(p > 0 && p < 1)) throw DomainError("p must lie in (0, 1)");
  double count = std::pow(static_cast<double>(k) + 1.0, static_cast<double>(m));
  if (count > static_cast<double>(max_windows)) {
    throw BudgetError("window LP with (k+1)^m = " + std::to_string(static_cast<long long>(count)) +
                      " variables exceeds the budget of " + std::to_string(max_windows));
  }
  WindowLP lp;
  lp.k_ = k;
  lp.m_ = m;
  lp.p_ = p;
  const std::size_t n = static_cast<std::size_t>(count);
  const std::uint32_t base = k + 1;
  lp.allowed_.assign(n, true);
  for (std::size_t w = 0; w < n; ++w) {
    auto s = lp.window(w);
    for (std::size_t pos = 0; pos + 1 < m; ++pos) {
      if (s[pos] != 0 && s[pos + 1] != 0 && s[pos] > s[pos + 1]) lp.allowed_[w] = false;
    }
  }

  {
    std::map<std::size_t, int> coef;
    for (std::size_t w = 0; w < n; ++w) coef[w] = 1;
    lp.rows_.push_back(make_row(LinearRow::Kind::Normalization, "norm", coef, Rational(1)));
  }

  // Shift rows, one per v in ([k] ∪ {B})^(m-1).
  std::size_t shifts = 1;
  for (std::size_t pos = 0; pos + 1 < m; ++pos) shifts *= base;
  for (std::size_t v = 0; v < shifts; ++v) {
    std::map<std::size_t, int> coef;
    for (std::uint32_t x = 0; x < base; ++x) {
      coef[x * shifts + v] += 1;  // x·v
      coef[v * base + x] -= 1;    // v·x
    }
    std::string name = "shift_";
    if (m == 1) {
      name += "e";
    } else {
      // Label v through the window-label helper of a length-(m-1) prefix.
      std::vector<std::uint32_t> sym(m - 1);
      std::size_t rest = v;
      for (std::size_t pos = m - 1; pos-- > 0;) {
        sym[pos] = static_cast<std::uint32_t>(rest % base);
        rest /= base;
      }
      for (std::size_t pos = 0; pos < sym.size(); ++pos) {
        if (k >= 10 && pos) name += '.';
        name += sym[pos] == 0 ? std::string("B") : std::to_string(sym[pos]);
      }
    }
    lp.rows_.push_back(make_row(LinearRow::Kind::Shift, name, coef, Rational(0)));
  }

  const Rational q = 1 - p;
  for (std::uint32_t i = 1; i <= k; ++i) {
    for (std::size_t pattern = 0; pattern < (std::size_t{1} << m); ++pattern) {
      std::map<std::size_t, int> coef;
      for (std::size_t w = 0; w < n; ++w) {
        auto s = lp.window(w);
        std::size_t ind = 0;
        for (std::size_t pos = 0; pos < m; ++pos) ind = (ind << 1) | (s[pos] == i ? 1u : 0u);
        if (ind == pattern) coef[w] = 1;
      }
      std::size_t ones = static_cast<std::size_t>(std::popcount(pattern));
      std::string name = "faith_" + std::to_string(i) + "_";
      for (std::size_t pos = 0; pos < m; ++pos) name += ((pattern >> (m - 1 - pos)) & 1u) ? '1' : '0';
      lp.rows_.push_back(make_row(LinearRow::Kind::Faithfulness, name, coef,
                                  rational_pow(p, ones) * rational_pow(q, m - ones)));
    }
  }
  return lp;
}

Rational exact_residual(const WindowLP& lp, std::span<const Rational> q) {
  if (q.size() != lp.windows()) throw DomainError("witness length does not match the window count");
  Rational worst = 0;
  auto bump = [&](const Rational& r) {
    Rational a = r < 0 ? Rational(-r) : r;
    if (a > worst) worst = a;
  };
  for (std::size_t w = 0; w < q.size(); ++w) {
    if (q[w] < 0) bump(q[w]);
    if (!lp.allowed(w) && q[w] != 0) bump(q[w]);
  }
  for (const auto& row : lp.rows()) {
    Rational act = 0;
    for (auto [w, c] : row.terms) act += c * q[w];
    bump(act - row.rhs);
  }
  return worst;
}

double residual(const WindowLP& lp, std::span<const double> q) {
  if (q.size() != lp.windows()) throw DomainError("witness length does not match the window count");
  double worst = 0.0;
  for (std::size_t w = 0; w < q.size(); ++w) {
    if (q[w] < 0) worst = std::max(worst, -q[w]);
    if (!lp.allowed(w)) worst = std::max(worst, std::abs(q[w]));
  }
  const std::vector<double> a = lp.dense_matrix();
  const std::vector<double> b = lp.rhs_double();
  const std::size_t n = lp.windows();
  for (std::size_t r = 0; r < b.size(); ++r) {
    double act = kernels::dot(std::span(a).subspan(r * n, n), q);
    worst = std::max(worst, std::abs(act - b[r]));
  }
  return worst;
}

namespace {

template <class T>
std::vector<T> marginalize_impl(const WindowLP& lp, std::span<const T> q) {
  if (lp.m() < 2) throw DomainError("cannot marginalize a window of length 1");
  if (q.size() != lp.windows()) throw DomainError("witness length does not match the window count");
  const std::size_t base = lp.k() + 1;
  std::vector<T> out(lp.windows() / base, T(0));
  for (std::size_t w = 0; w < q.size(); ++w) out[w / base] += q[w];
  return out;
}

}  // namespace

std::vector<double> marginalize_last(const WindowLP& lp, std::span<const double> q) {
  return marginalize_impl(lp, q);
}

std::vector<Rational> marginalize_last(const WindowLP& lp, std::span<const Rational> q) {
  return marginalize_impl(lp, q);
}

std::vector<Rational> product_witness(const WindowLP& lp) {
  if (lp.k() != 1) throw DomainError("the product witness is defined for k = 1 only");
  std::vector<Rational> q(lp.windows());
  for (std::size_t w = 0; w < q.size(); ++w) {
    Rational r = 1;
    for (std::uint32_t x : lp.window(w)) r *= x == 1 ? lp.p() : Rational(1 - lp.p());
    q[w] = r;
  }
  return q;
}

std::string export_mps(const WindowLP& lp) {
  auto var = [&](std::size_t w) { return "q_" + lp.window_label(w); };
  auto num = [](const Rational& r) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", to_double(r));
    return std::string(buf);
  };
  std::string out = "NAME window_k" + std::to_string(lp.k()) + "_m" + std::to_string(lp.m()) + "\n";
  out += "ROWS\n N  obj\n";
  for (const auto& row : lp.rows()) out += " E  " + row.name + "\n";

  // Column-major listing of the row terms.
  std::vector<std::vector<std::pair<std::size_t, int>>> columns(lp.windows());
  for (std::size_t r = 0; r < lp.rows().size(); ++r) {
    for (auto [w, c] : lp.rows()[r].terms) columns[w].emplace_back(r, c);
  }
  out += "COLUMNS\n";
  for (std::size_t w = 0; w < lp.windows(); ++w) {
    out += "    " + var(w) + "  obj  0\n";
    for (auto [r, c] : columns[w]) out += "    " + var(w) + "  " + lp.rows()[r].name + "  " + std::to_string(c) + "\n";
  }
  out += "RHS\n";
  for (const auto& row : lp.rows()) {
    if (row.rhs != 0) out += "    rhs  " + row.name + "  " + num(row.rhs) + "\n";
  }
  out += "BOUNDS\n";
  for (std::size_t w = 0; w < lp.windows(); ++w) {
    if (!lp.allowed(w)) out += " FX bnd  " + var(w) + "  0\n";
  }
  out += "ENDATA\n";
  return out;
}

}  // namespace avoid
