#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "avoid/rational.hpp"
#include "avoid/sequence.hpp"

namespace avoid {

enum class Rule {
  CollapseBlanks,
  DeleteZeroWeightPair,
  CollapseWeightOnePair,
  DeleteVictimSymbol,
};

std::string_view rule_name(Rule rule);
/// Throws DomainError for an unknown name.
Rule parse_rule(std::string_view name);

struct Donation {
  /// Index into RedistributionReport::pairs.
  std::size_t pair_index = 0;
  std::uint32_t recipient = 0;
  Rational amount;

  bool operator==(const Donation&) const = default;
};

/// Each neighbor pair with b distinct symbols between (one of them B)
/// donates 1/(b(b-1)) to each of the b-1 walker symbols between.
struct RedistributionReport {
  std::uint32_t k = 1;
  std::vector<NeighborPair> pairs;
  /// Indexed by walker; entry 0 unused.
  std::vector<Rational> input;
  std::vector<Rational> output;
  std::vector<Donation> donations;

  bool operator==(const RedistributionReport&) const = default;
};

/// One edit of the reduction. `position` is 1-based in `before`:
///   CollapseBlanks         the second B of a BB pair (removed)
///   DeleteZeroWeightPair   the right element of an adjacent equal pair (removed)
///   CollapseWeightOnePair  the left i of an "i B i" pattern (the next two are removed)
///   DeleteVictimSymbol     unused (0); `victim` names the deleted symbol
struct ReductionStep {
  Rule rule = Rule::CollapseBlanks;
  std::size_t position = 0;
  std::uint32_t victim = 0;
  Seq before;
  Seq after;
  Rational weight_delta;
  std::int64_t blank_delta = 0;
  /// Present iff rule == DeleteVictimSymbol.
  std::optional<RedistributionReport> redistribution;
};

struct ReductionCertificate {
  Seq initial;
  std::vector<ReductionStep> steps;
  Seq final_seq;
};

struct CertificateCheck {
  bool ok = false;
  /// First failure, empty when ok.
  std::string diagnosis;
  /// The inequality established by a valid certificate: weight <= blanks.
  Rational proven_weight;
  std::int64_t proven_blanks = 0;

  explicit operator bool() const { return ok; }
};

/// Throws PreconditionError unless every neighbor pair has b >= 2 with a
/// blank among its in-between symbols.
RedistributionReport redistribution(const Seq& s);

/// No walker symbol and no BB left.
bool is_terminal(const Seq& s);

/// Applies the edit described by (rule, position, victim) without any
/// applicability check beyond bounds. Throws DomainError when out of range.
Seq apply_edit(const Seq& s, Rule rule, std::size_t position, std::uint32_t victim);

/// First applicable rule in the order CollapseBlanks, DeleteZeroWeightPair,
/// CollapseWeightOnePair, DeleteVictimSymbol; leftmost match, smallest
/// admissible victim. Throws PreconditionError on a terminal sequence.
ReductionStep reduce_step(const Seq& s);

/// Throws PreconditionError if s is not permissible.
ReductionCertificate reduce_certificate(const Seq& s);

/// Recomputes everything from the sequences alone; never trusts stored
/// deltas or redistribution tables.
CertificateCheck check_certificate(const ReductionCertificate& c);

/// Text form: header "k T", initial sequence, one line per step
/// ("<Rule> <position|victim> <num/den> <blank_delta>"), final sequence.
std::string serialize_certificate(const ReductionCertificate& c);
/// Replays the edits; stored deltas are taken from the file as written so
/// that check_certificate can reject tampered ones.
ReductionCertificate parse_certificate(std::string_view text);

struct ExhaustiveOptions {
  std::uint32_t k = 1;
  std::size_t max_len = 1;
  /// Upper limit on sum_{L<=max_len} (k+1)^L.
  double budget = 2e8;
  unsigned jobs = 1;
  /// At most this many failures of each kind are kept verbatim.
  std::size_t keep_failures = 32;
};

struct ExhaustiveReport {
  std::uint32_t k = 1;
  std::size_t max_len = 0;
  std::uint64_t words_considered = 0;
  std::uint64_t sequences_checked = 0;
  /// Index L holds the number of permissible sequences of length L.
  std::vector<std::uint64_t> per_length;
  std::uint64_t tight = 0;
  std::uint64_t certificate_steps = 0;
  std::uint64_t victim_steps = 0;
  std::size_t max_steps = 0;
  std::uint64_t counterexample_count = 0;
  std::uint64_t certificate_failure_count = 0;
  std::vector<Seq> counterexamples;
  std::vector<std::pair<Seq, std::string>> certificate_failures;

  bool passed() const { return counterexample_count == 0 && certificate_failure_count == 0; }
};

/// Every permissible sequence of length 1..max_len, in lexicographic order
/// with B < 1 < ... < k. Throws BudgetError.
ExhaustiveReport verify_lemma_exhaustive(const ExhaustiveOptions& options);

}  // namespace avoid
