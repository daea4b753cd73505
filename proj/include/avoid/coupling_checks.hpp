#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "avoid/sequence.hpp"
#include "avoid/trace.hpp"

namespace avoid {

enum class ViolationKind {
  /// X_i(t) = X_j(t) = 1, i < j.
  Simultaneous,
  /// X_j(t) = 1 and X_i(t+1) = 1 with i < j.
  CrossTime,
  /// Walker i lands on walker j's vertex, j < i having already moved this round.
  SameRound,
  /// Walker i lands on the vertex walker j > i has not yet left.
  NotYetVacated,
  /// A walker on loopless K_n stayed put.
  Stayed,
};
inline constexpr std::size_t kViolationKinds = 5;

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::size_t t;
  std::uint32_t i;
  /// Zero for Stayed.
  std::uint32_t j;

  bool operator==(const Violation&) const = default;
};

struct ViolationReport {
  std::size_t rows = 0;
  std::array<std::uint64_t, kViolationKinds> counts{};
  /// The first `kept` violations in (t, kind, i, j) scan order.
  std::vector<Violation> examples;

  std::uint64_t total() const;
  std::uint64_t count(ViolationKind kind) const { return counts[static_cast<std::size_t>(kind)]; }
  bool ok() const { return total() == 0; }
};

inline constexpr std::size_t kDefaultKeptViolations = 100;

ViolationReport check_1avoidance(const CouplingTrace& tr, std::size_t kept = kDefaultKeptViolations);

/// Throws PreconditionError on a row with two or more ones.
Seq encode(const CouplingTrace& tr);

ViolationReport check_walker_avoidance(const WalkerTrace& tr, std::size_t kept = kDefaultKeptViolations);

/// X_i(t) = 1 iff walker i sits on vertex v after round t. Throws DomainError for v outside [1, n].
CouplingTrace project(const WalkerTrace& tr, std::uint32_t vertex);

}  // namespace avoid
