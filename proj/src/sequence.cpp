#include "avoid/sequence.hpp"

#include <charconv>
#include <sstream>

#include "avoid/error.hpp"

namespace avoid {

Seq::Seq(std::uint32_t k, std::vector<Symbol> symbols) : k_(k), symbols_(std::move(symbols)) {
  if (k_ < 1) throw DomainError("walker count k must be at least 1");
  for (Symbol s : symbols_) {
    if (s.index() > k_) {
      throw DomainError("walker index " + std::to_string(s.index()) + " exceeds k = " +
                        std::to_string(k_));
    }
  }
}

Seq parse_seq(std::string_view text, std::uint32_t k) {
  if (k < 1) throw DomainError("walker count k must be at least 1");
  std::vector<Symbol> symbols;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    if (token == "B") {
      symbols.push_back(Symbol::blank());
      continue;
    }
    std::uint32_t index = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
    if (ec != std::errc{} || ptr != token.data() + token.size() || index == 0) {
      throw DomainError("malformed sequence token '" + std::string(token) + "'");
    }
    if (index > k) {
      throw DomainError("walker index " + std::string(token) + " exceeds k = " + std::to_string(k));
    }
    symbols.push_back(Symbol::walker(index));
  }
  return Seq(k, std::move(symbols));
}

std::string to_string(const Seq& s) {
  std::string out;
  for (std::size_t t = 0; t < s.size(); ++t) {
    if (t) out += ' ';
    Symbol a = s.symbols()[t];
    out += a.is_blank() ? std::string("B") : std::to_string(a.index());
  }
  return out;
}

bool is_permissible(const Seq& s) {
  auto a = s.symbols();
  for (std::size_t t = 0; t + 1 < a.size(); ++t) {
    if (a[t].is_walker() && a[t + 1].is_walker() && a[t].index() > a[t + 1].index()) return false;
  }
  return true;
}

Rational pair_weight(std::uint32_t b) { return b == 0 ? Rational(0) : Rational(1, b); }

std::vector<NeighborPair> neighbor_pairs(const Seq& s) {
  auto a = s.symbols();
  std::vector<NeighborPair> pairs;
  std::vector<std::size_t> last(s.k() + 1, 0);  // 1-based position of the latest occurrence
  std::vector<char> seen(s.k() + 1, 0);
  std::vector<std::vector<NeighborPair>> by_symbol(s.k() + 1);
  for (std::size_t t = 1; t <= a.size(); ++t) {
    std::uint32_t i = a[t - 1].index();
    if (i == 0) continue;
    if (last[i] != 0) {
      std::fill(seen.begin(), seen.end(), 0);
      std::uint32_t b = 0;
      for (std::size_t u = last[i] + 1; u < t; ++u) {
        std::uint32_t x = a[u - 1].index();
        if (!seen[x]) {
          seen[x] = 1;
          ++b;
        }
      }
      by_symbol[i].push_back(NeighborPair{i, last[i], t, b, pair_weight(b)});
    }
    last[i] = t;
  }
  for (auto& group : by_symbol) {
    for (auto& p : group) pairs.push_back(std::move(p));
  }
  return pairs;
}

WeightReport total_weight(const Seq& s) {
  WeightReport report;
  report.k = s.k();
  report.pairs = neighbor_pairs(s);
  report.per_symbol_output.assign(s.k() + 1, Rational(0));
  for (const auto& p : report.pairs) {
    report.per_symbol_output[p.symbol] += p.weight;
    report.total += p.weight;
  }
  report.blanks = blank_count(s);
  return report;
}

std::size_t blank_count(const Seq& s) {
  std::size_t n = 0;
  for (Symbol a : s.symbols()) n += a.is_blank();
  return n;
}

}  // namespace avoid
