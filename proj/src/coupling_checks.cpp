#include "avoid/coupling_checks.hpp"

#include <numeric>

#include "avoid/error.hpp"
#include "avoid/kernels.hpp"

namespace avoid {

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Simultaneous: return "simultaneous";
    case ViolationKind::CrossTime: return "cross_time";
    case ViolationKind::SameRound: return "same_round";
    case ViolationKind::NotYetVacated: return "not_yet_vacated";
    case ViolationKind::Stayed: return "stayed";
  }
  return "?";
}

std::uint64_t ViolationReport::total() const { return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}); }

namespace {

void record(ViolationReport& rep, std::size_t kept, Violation v) {
  ++rep.counts[static_cast<std::size_t>(v.kind)];
  if (rep.examples.size() < kept) rep.examples.push_back(v);
}

}  // namespace

ViolationReport check_1avoidance(const CouplingTrace& tr, std::size_t kept) {
  ViolationReport rep;
  rep.rows = tr.length();
  const std::uint32_t k = tr.k();
  std::vector<std::uint32_t> ones, next_ones;
  auto collect = [&](std::size_t t, std::vector<std::uint32_t>& out) {
    out.clear();
    auto row = tr.row(t);
    for (std::uint32_t i = 0; i < k; ++i) {
      if (row[i]) out.push_back(i + 1);
    }
  };
  if (rep.rows > 0) collect(1, ones);
  for (std::size_t t = 1; t <= rep.rows; ++t) {
    for (std::size_t a = 0; a < ones.size(); ++a) {
      for (std::size_t b = a + 1; b < ones.size(); ++b) {
        record(rep, kept, Violation{ViolationKind::Simultaneous, t, ones[a], ones[b]});
      }
    }
    if (t == rep.rows) break;
    collect(t + 1, next_ones);
    for (std::uint32_t i : next_ones) {
      for (std::uint32_t j : ones) {
        if (i < j) record(rep, kept, Violation{ViolationKind::CrossTime, t, i, j});
      }
    }
    std::swap(ones, next_ones);
  }
  return rep;
}

Seq encode(const CouplingTrace& tr) {
  std::vector<Symbol> symbols;
  symbols.reserve(tr.length());
  for (std::size_t t = 1; t <= tr.length(); ++t) {
    Symbol a = Symbol::blank();
    auto row = tr.row(t);
    for (std::uint32_t i = 0; i < tr.k(); ++i) {
      if (!row[i]) continue;
      if (a.is_walker()) {
        throw PreconditionError("row " + std::to_string(t) + " has more than one walker on the tracked site");
      }
      a = Symbol::walker(i + 1);
    }
    symbols.push_back(a);
  }
  return Seq(tr.k(), std::move(symbols));
}

ViolationReport check_walker_avoidance(const WalkerTrace& tr, std::size_t kept) {
  ViolationReport rep;
  rep.rows = tr.length();
  const std::uint32_t k = tr.k();
  for (std::size_t t = 1; t <= rep.rows; ++t) {
    for (std::uint32_t i = 1; i <= k; ++i) {
      const std::int32_t v = tr.at(t, i);
      for (std::uint32_t j = 1; j < i; ++j) {
        if (tr.at(t, j) == v) record(rep, kept, Violation{ViolationKind::SameRound, t, i, j});
      }
      if (t == 1) continue;
      for (std::uint32_t j = i + 1; j <= k; ++j) {
        if (tr.at(t - 1, j) == v) record(rep, kept, Violation{ViolationKind::NotYetVacated, t, i, j});
      }
      if (!tr.looped() && tr.at(t - 1, i) == v) record(rep, kept, Violation{ViolationKind::Stayed, t, i, 0});
    }
  }
  return rep;
}

CouplingTrace project(const WalkerTrace& tr, std::uint32_t vertex) {
  if (vertex < 1 || vertex > tr.n()) {
    throw DomainError("vertex " + std::to_string(vertex) + " outside [1, " + std::to_string(tr.n()) + "]");
  }
  std::vector<std::uint8_t> mask(tr.cells().size());
  kernels::match_mask(tr.cells(), static_cast<std::int32_t>(vertex), mask);
  CouplingTrace out(tr.k());
  out.reserve(tr.length());
  for (std::size_t t = 0; t < tr.length(); ++t) {
    out.push_row(std::span<const std::uint8_t>(mask).subspan(t * tr.k(), tr.k()));
  }
  return out;
}

}  // namespace avoid
