#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/rational.hpp"

namespace avoid {

/// One letter of the alphabet [k] ∪ {B}. Value 0 is the blank; values
/// 1..k are walker indices, so the natural order is B < 1 < ... < k.
class Symbol {
 public:
  constexpr Symbol() = default;

  static constexpr Symbol blank() { return Symbol{}; }
  static constexpr Symbol walker(std::uint32_t index) { return Symbol{index}; }

  constexpr bool is_blank() const { return value_ == 0; }
  constexpr bool is_walker() const { return value_ != 0; }
  /// Walker index, or 0 for the blank.
  constexpr std::uint32_t index() const { return value_; }

  constexpr auto operator<=>(const Symbol&) const = default;

 private:
  constexpr explicit Symbol(std::uint32_t v) : value_(v) {}
  std::uint32_t value_ = 0;
};

/// A finite word over [k] ∪ {B}. Positions are 1-based in every public
/// interface that reports a time t.
class Seq {
 public:
  Seq() = default;
  /// Throws DomainError if k < 1 or a walker index exceeds k.
  Seq(std::uint32_t k, std::vector<Symbol> symbols);

  std::uint32_t k() const { return k_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  std::span<const Symbol> symbols() const { return symbols_; }
  /// 1-based access, matching a(t).
  Symbol at(std::size_t t) const { return symbols_.at(t - 1); }

  bool operator==(const Seq&) const = default;

 private:
  std::uint32_t k_ = 1;
  std::vector<Symbol> symbols_;
};

struct NeighborPair {
  std::uint32_t symbol = 0;
  std::size_t t1 = 0;
  std::size_t t2 = 0;
  /// Distinct alphabet elements strictly between t1 and t2 (B counts).
  std::uint32_t b = 0;
  Rational weight;

  bool operator==(const NeighborPair&) const = default;
};

struct WeightReport {
  std::uint32_t k = 1;
  std::vector<NeighborPair> pairs;
  /// Indexed by walker; entry 0 is unused and stays zero.
  std::vector<Rational> per_symbol_output;
  Rational total;
  std::size_t blanks = 0;
};

/// Tokens are "B" or a decimal walker index in [1, k], separated by
/// whitespace. Throws DomainError on malformed input.
Seq parse_seq(std::string_view text, std::uint32_t k);

/// Inverse of parse_seq: single spaces, no trailing newline.
std::string to_string(const Seq& s);

bool is_permissible(const Seq& s);

/// Ordered by (symbol, t1).
std::vector<NeighborPair> neighbor_pairs(const Seq& s);

WeightReport total_weight(const Seq& s);

std::size_t blank_count(const Seq& s);

/// Weight of a pair with b distinct in-between symbols: 1/b, or 0 when b = 0.
Rational pair_weight(std::uint32_t b);

}  // namespace avoid
