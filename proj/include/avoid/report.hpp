#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "avoid/coupling_checks.hpp"
#include "avoid/feasibility.hpp"
#include "avoid/lemma.hpp"
#include "avoid/sequence.hpp"
#include "avoid/statistics.hpp"

namespace avoid {

inline constexpr std::string_view kToolName = "avoidctl";
inline constexpr std::string_view kToolVersion = "0.1.0";

enum class Format { Json, Csv, Text };

/// Throws DomainError for anything but "json", "csv", "text".
Format parse_format(std::string_view name);

/// Embedded in every JSON and CSV report.
struct RunInfo {
  std::string command;
  std::uint64_t seed = 0;
  /// Full flag set in a stable order.
  std::vector<std::pair<std::string, std::string>> flags;
};

struct TraceCheckReport {
  /// "coupling" or "walker".
  std::string trace_kind;
  ViolationReport violations;
  std::optional<TestReport> faithfulness;

  bool passed() const { return violations.ok() && (!faithfulness || faithfulness->passed()); }
};

/// Decimal with 12 significant digits, as used in CSV.
std::string decimal12(double x);

std::string write_report(const Seq& s, const WeightReport& w, Format f, const RunInfo& run);
std::string write_report(const ReductionCertificate& c, const CertificateCheck& check, Format f, const RunInfo& run);
std::string write_report(const ExhaustiveReport& r, Format f, const RunInfo& run);
std::string write_report(const ViolationReport& r, Format f, const RunInfo& run);
std::string write_report(const TraceCheckReport& r, Format f, const RunInfo& run);
std::string write_report(const EmpiricalStats& s, Format f, const RunInfo& run);
std::string write_report(const ScanReport& r, Format f, const RunInfo& run);

/// Flat key/value result: JSON object, one-row CSV, or `text` verbatim.
std::string write_fields(const nlohmann::ordered_json& fields, Format f, const RunInfo& run, std::string_view text);

}  // namespace avoid
