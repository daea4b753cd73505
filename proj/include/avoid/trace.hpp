#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace avoid {

/// T x k occupancy matrix, row t = (X_1(t), ..., X_k(t)), stored row-major.
class CouplingTrace {
 public:
  CouplingTrace() = default;
  explicit CouplingTrace(std::uint32_t k);

  std::uint32_t k() const { return k_; }
  std::size_t length() const { return k_ == 0 ? 0 : cells_.size() / k_; }

  /// 1-based t and i.
  std::uint8_t at(std::size_t t, std::uint32_t i) const { return cells_[(t - 1) * k_ + (i - 1)]; }
  std::span<const std::uint8_t> row(std::size_t t) const {
    return std::span(cells_).subspan((t - 1) * k_, k_);
  }
  std::span<const std::uint8_t> cells() const { return cells_; }

  /// Throws DomainError unless row.size() == k and entries are 0/1.
  void push_row(std::span<const std::uint8_t> row);
  void reserve(std::size_t rows) { cells_.reserve(rows * k_); }

  bool operator==(const CouplingTrace&) const = default;

 private:
  std::uint32_t k_ = 1;
  std::vector<std::uint8_t> cells_;
};

/// Positions of k walkers on K_n (looped = false) or K_n^* (looped = true).
/// Row t holds each walker's vertex after its move in round t; vertices are
/// 1..n. Walkers move in index order within a round.
class WalkerTrace {
 public:
  WalkerTrace() = default;
  WalkerTrace(std::uint32_t n, std::uint32_t k, bool looped);

  std::uint32_t n() const { return n_; }
  std::uint32_t k() const { return k_; }
  bool looped() const { return looped_; }
  std::size_t length() const { return k_ == 0 ? 0 : cells_.size() / k_; }

  std::int32_t at(std::size_t t, std::uint32_t i) const { return cells_[(t - 1) * k_ + (i - 1)]; }
  std::span<const std::int32_t> row(std::size_t t) const {
    return std::span(cells_).subspan((t - 1) * k_, k_);
  }
  std::span<const std::int32_t> cells() const { return cells_; }

  /// Throws DomainError unless row.size() == k and entries lie in [1, n].
  void push_row(std::span<const std::int32_t> row);
  void reserve(std::size_t rows) { cells_.reserve(rows * k_); }

  bool operator==(const WalkerTrace&) const = default;

 private:
  std::uint32_t n_ = 1;
  std::uint32_t k_ = 1;
  bool looped_ = true;
  std::vector<std::int32_t> cells_;
};

using AnyTrace = std::variant<CouplingTrace, WalkerTrace>;

/// Header "T k", then T rows of k space-separated 0/1 values.
std::string serialize_trace(const CouplingTrace& tr);
/// Header "T k n looped", then T rows of k vertex indices.
std::string serialize_trace(const WalkerTrace& tr);
/// Dispatches on the header's field count. Throws DomainError.
AnyTrace parse_trace(std::string_view text);

}  // namespace avoid
