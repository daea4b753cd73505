#pragma once

// Independent reference computations for the tests. Deliberately naive and
// free of the library's own code paths: plain int64 fractions, std::set for
// distinct counts, direct transfer-matrix counting.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "avoid/rational.hpp"

namespace oracle {

struct Frac {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Frac() = default;
  Frac(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { norm(); }
  void norm() {
    if (den < 0) num = -num, den = -den;
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) num /= g, den /= g;
  }
  Frac operator+(const Frac& o) const { return Frac(num * o.den + o.num * den, den * o.den); }
  Frac operator-(const Frac& o) const { return Frac(num * o.den - o.num * den, den * o.den); }
  bool operator==(const Frac&) const = default;
  bool operator<=(const Frac& o) const { return num * o.den <= o.num * den; }
};

inline bool same(const avoid::Rational& r, const Frac& f) {
  return avoid::Rational(f.num, f.den) == r;
}

// Symbols as plain ints, 0 = blank.
using Word = std::vector<int>;

inline Word word_of(const std::string& text) {
  Word w;
  std::string tok;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ' ') {
      if (!tok.empty()) w.push_back(tok == "B" ? 0 : std::stoi(tok));
      tok.clear();
    } else {
      tok += text[i];
    }
  }
  return w;
}

inline bool permissible(const Word& w) {
  for (std::size_t t = 0; t + 1 < w.size(); ++t)
    if (w[t] > 0 && w[t + 1] > 0 && w[t] > w[t + 1]) return false;
  return true;
}

inline int blanks(const Word& w) {
  int c = 0;
  for (int x : w) c += x == 0;
  return c;
}

// Weight of the pair ending at t2 (0-based), scanning left for the partner.
struct BrutePair {
  int symbol;
  std::size_t t1, t2;  // 1-based
  int b;
  Frac weight;
};

inline std::vector<BrutePair> brute_pairs(const Word& w) {
  std::vector<BrutePair> out;
  for (std::size_t t2 = 0; t2 < w.size(); ++t2) {
    if (w[t2] == 0) continue;
    std::set<int> between;
    for (std::size_t t1 = t2; t1-- > 0;) {
      if (w[t1] == w[t2]) {
        const int b = static_cast<int>(between.size());
        out.push_back({w[t2], t1 + 1, t2 + 1, b, b == 0 ? Frac(0) : Frac(1, b)});
        break;
      }
      between.insert(w[t1]);
    }
  }
  return out;
}

inline Frac brute_total(const Word& w) {
  Frac s;
  for (const auto& p : brute_pairs(w)) s = s + p.weight;
  return s;
}

// Number of permissible words of each length 1..max_len over k walkers,
// by a transfer matrix on the last symbol.
inline std::vector<std::uint64_t> permissible_counts(int k, std::size_t max_len) {
  std::vector<std::uint64_t> ending(k + 1, 1), out{0};
  for (std::size_t len = 1; len <= max_len; ++len) {
    if (len > 1) {
      std::vector<std::uint64_t> next(k + 1, 0);
      for (int prev = 0; prev <= k; ++prev)
        for (int x = 0; x <= k; ++x)
          if (prev == 0 || x == 0 || prev <= x) next[x] += ending[prev];
      ending = next;
    }
    out.push_back(std::accumulate(ending.begin(), ending.end(), std::uint64_t{0}));
  }
  return out;
}

// Upper-tail probability of chi-square with one degree of freedom.
inline double chi2_sf_dof1(double x) { return std::erfc(std::sqrt(x / 2)); }

// Largest grid point p with p (1 - p ln p) <= 1/k, scanning from 0 upward.
inline double max_p_scan(int k, double step) {
  double best = 0;
  for (double p = step; p <= 1; p += step) {
    if (p * (1 - p * std::log(p)) <= 1.0 / k) best = p;
    else break;
  }
  return best;
}

}  // namespace oracle
