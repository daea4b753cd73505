#include "avoid/report.hpp"

#include <cmath>
#include <cstdio>

#include "avoid/bounds.hpp"
#include "avoid/error.hpp"

namespace avoid {

using nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw DomainError("unknown format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string decimal12(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

ordered_json meta(const RunInfo& run) {
  ordered_json flags = ordered_json::object();
  for (const auto& [k, v] : run.flags) flags[k] = v;
  return ordered_json{{"tool", kToolName}, {"version", kToolVersion}, {"command", run.command},
                      {"seed", run.seed}, {"flags", flags}};
}

std::string json_out(const RunInfo& run, ordered_json body) {
  ordered_json doc;
  doc["meta"] = meta(run);
  for (auto& [key, value] : body.items()) doc[key] = std::move(value);
  return doc.dump(2) + "\n";
}

std::string csv_comment(const RunInfo& run) {
  std::string out = "# " + std::string(kToolName) + " " + std::string(kToolVersion) + " command=" + run.command +
                    " seed=" + std::to_string(run.seed);
  for (const auto& [k, v] : run.flags) out += " --" + k + "=" + v;
  return out + "\n";
}

std::string dec(const Rational& r) { return decimal12(to_double(r)); }

ordered_json rational_map(const std::vector<Rational>& values) {
  ordered_json out = ordered_json::object();
  for (std::size_t i = 1; i < values.size(); ++i) out[std::to_string(i)] = to_string(values[i]);
  return out;
}

}  // namespace

std::string write_fields(const ordered_json& fields, Format f, const RunInfo& run, std::string_view text) {
  switch (f) {
    case Format::Json: return json_out(run, fields);
    case Format::Csv: {
      std::string header, row;
      for (const auto& [key, value] : fields.items()) {
        if (!header.empty()) {
          header += ',';
          row += ',';
        }
        header += key;
        if (value.is_number_float()) {
          row += decimal12(value.get<double>());
        } else if (value.is_string()) {
          row += value.get<std::string>();
        } else {
          row += value.dump();
        }
      }
      return csv_comment(run) + header + "\n" + row + "\n";
    }
    case Format::Text: return std::string(text) + "\n";
  }
  return {};
}

std::string write_report(const Seq& s, const WeightReport& w, Format f, const RunInfo& run) {
  const bool permissible = is_permissible(s);
  switch (f) {
    case Format::Json: {
      ordered_json pairs = ordered_json::array();
      for (const auto& p : w.pairs) {
        pairs.push_back({{"symbol", p.symbol}, {"t1", p.t1}, {"t2", p.t2}, {"b", p.b}, {"weight", to_string(p.weight)}});
      }
      return json_out(run, {{"k", w.k},
                            {"sequence", to_string(s)},
                            {"length", s.size()},
                            {"permissible", permissible},
                            {"pairs", pairs},
                            {"per_symbol_output", rational_map(w.per_symbol_output)},
                            {"total", to_string(w.total)},
                            {"blanks", w.blanks},
                            {"weight_at_most_blanks", w.total <= Rational(static_cast<long long>(w.blanks))}});
    }
    case Format::Csv: {
      std::string out = csv_comment(run) + "symbol,t1,t2,b,weight\n";
      for (const auto& p : w.pairs) {
        out += std::to_string(p.symbol) + "," + std::to_string(p.t1) + "," + std::to_string(p.t2) + "," +
               std::to_string(p.b) + "," + dec(p.weight) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out = "sequence: " + to_string(s) + "\n";
      out += std::string("permissible: ") + (permissible ? "yes" : "no") + "\n";
      for (const auto& p : w.pairs) {
        out += "pair " + std::to_string(p.symbol) + " (" + std::to_string(p.t1) + "," + std::to_string(p.t2) +
               ") b=" + std::to_string(p.b) + " weight=" + to_string(p.weight) + "\n";
      }
      for (std::size_t i = 1; i < w.per_symbol_output.size(); ++i) {
        out += "output " + std::to_string(i) + ": " + to_string(w.per_symbol_output[i]) + "\n";
      }
      out += "total: " + to_string(w.total) + "\nblanks: " + std::to_string(w.blanks) + "\n";
      return out;
    }
  }
  return {};
}

std::string write_report(const ReductionCertificate& c, const CertificateCheck& check, Format f, const RunInfo& run) {
  switch (f) {
    case Format::Json: {
      ordered_json steps = ordered_json::array();
      for (const auto& st : c.steps) {
        ordered_json j{{"rule", rule_name(st.rule)}};
        if (st.rule == Rule::DeleteVictimSymbol) {
          j["victim"] = st.victim;
        } else {
          j["position"] = st.position;
        }
        j["weight_delta"] = to_string(st.weight_delta);
        j["blank_delta"] = st.blank_delta;
        j["after"] = to_string(st.after);
        if (st.redistribution) {
          j["input"] = rational_map(st.redistribution->input);
          j["output"] = rational_map(st.redistribution->output);
        }
        steps.push_back(std::move(j));
      }
      return json_out(run, {{"k", c.initial.k()},
                            {"initial", to_string(c.initial)},
                            {"steps", steps},
                            {"final", to_string(c.final_seq)},
                            {"valid", check.ok},
                            {"diagnosis", check.diagnosis},
                            {"proven_weight", to_string(check.proven_weight)},
                            {"proven_blanks", check.proven_blanks}});
    }
    case Format::Csv: {
      std::string out = csv_comment(run) + "step,rule,where,weight_delta,blank_delta,length_after\n";
      for (std::size_t n = 0; n < c.steps.size(); ++n) {
        const auto& st = c.steps[n];
        out += std::to_string(n + 1) + "," + std::string(rule_name(st.rule)) + "," +
               std::to_string(st.rule == Rule::DeleteVictimSymbol ? st.victim : st.position) + "," +
               dec(st.weight_delta) + "," + std::to_string(st.blank_delta) + "," + std::to_string(st.after.size()) + "\n";
      }
      return out;
    }
    case Format::Text: return serialize_certificate(c);
  }
  return {};
}

std::string write_report(const ExhaustiveReport& r, Format f, const RunInfo& run) {
  switch (f) {
    case Format::Json: {
      ordered_json per_length = ordered_json::array();
      for (std::size_t len = 1; len < r.per_length.size(); ++len) per_length.push_back(r.per_length[len]);
      ordered_json counterexamples = ordered_json::array();
      for (const auto& s : r.counterexamples) counterexamples.push_back(to_string(s));
      ordered_json failures = ordered_json::array();
      for (const auto& [s, why] : r.certificate_failures) failures.push_back({{"sequence", to_string(s)}, {"diagnosis", why}});
      return json_out(run, {{"k", r.k},
                            {"max_len", r.max_len},
                            {"words_considered", r.words_considered},
                            {"sequences_checked", r.sequences_checked},
                            {"per_length", per_length},
                            {"tight", r.tight},
                            {"certificate_steps", r.certificate_steps},
                            {"victim_steps", r.victim_steps},
                            {"max_steps", r.max_steps},
                            {"counterexample_count", r.counterexample_count},
                            {"certificate_failure_count", r.certificate_failure_count},
                            {"counterexamples", counterexamples},
                            {"certificate_failures", failures},
                            {"passed", r.passed()}});
    }
    case Format::Csv:
      return csv_comment(run) +
             "k,max_len,sequences_checked,counterexamples,certificate_failures,tight,victim_steps,max_steps,passed\n" +
             std::to_string(r.k) + "," + std::to_string(r.max_len) + "," + std::to_string(r.sequences_checked) + "," +
             std::to_string(r.counterexample_count) + "," + std::to_string(r.certificate_failure_count) + "," +
             std::to_string(r.tight) + "," + std::to_string(r.victim_steps) + "," + std::to_string(r.max_steps) + "," +
             (r.passed() ? "true" : "false") + "\n";
    case Format::Text: {
      std::string out = "k=" + std::to_string(r.k) + " max_len=" + std::to_string(r.max_len) + "\n";
      out += "sequences checked: " + std::to_string(r.sequences_checked) + "\n";
      out += "tight (weight = blanks): " + std::to_string(r.tight) + "\n";
      out += "counterexamples: " + std::to_string(r.counterexample_count) + "\n";
      out += "certificate failures: " + std::to_string(r.certificate_failure_count) + "\n";
      for (const auto& s : r.counterexamples) out += "  counterexample: " + to_string(s) + "\n";
      for (const auto& [s, why] : r.certificate_failures) out += "  failure: " + to_string(s) + ": " + why + "\n";
      out += r.passed() ? "OK\n" : "FAILED\n";
      return out;
    }
  }
  return {};
}

namespace {

ordered_json violations_json(const ViolationReport& r) {
  ordered_json counts = ordered_json::object();
  for (std::size_t n = 0; n < kViolationKinds; ++n) counts[std::string(violation_name(static_cast<ViolationKind>(n)))] = r.counts[n];
  ordered_json examples = ordered_json::array();
  for (const auto& v : r.examples) {
    examples.push_back({{"kind", violation_name(v.kind)}, {"t", v.t}, {"i", v.i}, {"j", v.j}});
  }
  return ordered_json{{"rows", r.rows}, {"ok", r.ok()}, {"total", r.total()}, {"counts", counts}, {"examples", examples}};
}

std::string violations_text(const ViolationReport& r) {
  if (r.ok()) return "OK\n";
  std::string out = "VIOLATIONS " + std::to_string(r.total()) + " in " + std::to_string(r.rows) + " rows\n";
  for (std::size_t n = 0; n < kViolationKinds; ++n) {
    if (r.counts[n]) out += std::string(violation_name(static_cast<ViolationKind>(n))) + ": " + std::to_string(r.counts[n]) + "\n";
  }
  for (const auto& v : r.examples) {
    out += "  " + std::string(violation_name(v.kind)) + " t=" + std::to_string(v.t) + " i=" + std::to_string(v.i) +
           " j=" + std::to_string(v.j) + "\n";
  }
  return out;
}

std::string violations_csv_rows(const ViolationReport& r) {
  std::string out;
  for (const auto& v : r.examples) {
    out += std::string(violation_name(v.kind)) + "," + std::to_string(v.t) + "," + std::to_string(v.i) + "," +
           std::to_string(v.j) + "\n";
  }
  return out;
}

ordered_json tests_json(const TestReport& r) {
  ordered_json tests = ordered_json::array();
  for (const auto& t : r.tests) {
    tests.push_back({{"name", t.name}, {"walker", t.walker}, {"estimate", t.estimate}, {"statistic", t.statistic},
                     {"threshold", t.threshold}, {"pass", t.pass}});
  }
  return ordered_json{{"p", r.p},
                      {"rows", r.rows},
                      {"z_threshold", r.params.z_threshold},
                      {"max_lag", r.params.max_lag},
                      {"window", r.params.window},
                      {"chi2_alpha", r.params.chi2_alpha},
                      {"passed", r.passed()},
                      {"tests", tests}};
}

std::string tests_text(const TestReport& r) {
  std::string out;
  for (const auto& t : r.tests) {
    out += std::string(t.pass ? "PASS " : "FAIL ") + t.name + " walker=" + std::to_string(t.walker) +
           " estimate=" + decimal12(t.estimate) + " statistic=" + decimal12(t.statistic) +
           " threshold=" + decimal12(t.threshold) + "\n";
  }
  out += r.passed() ? "faithfulness: PASS\n" : "faithfulness: FAIL\n";
  return out;
}

}  // namespace

std::string write_report(const ViolationReport& r, Format f, const RunInfo& run) {
  switch (f) {
    case Format::Json: return json_out(run, violations_json(r));
    case Format::Csv: return csv_comment(run) + "kind,t,i,j\n" + violations_csv_rows(r);
    case Format::Text: return violations_text(r);
  }
  return {};
}

std::string write_report(const TraceCheckReport& r, Format f, const RunInfo& run) {
  switch (f) {
    case Format::Json: {
      ordered_json body{{"trace_kind", r.trace_kind}, {"passed", r.passed()}, {"avoidance", violations_json(r.violations)}};
      if (r.faithfulness) body["faithfulness"] = tests_json(*r.faithfulness);
      return json_out(run, body);
    }
    case Format::Csv: {
      std::string out = csv_comment(run) + "check,name,walker,estimate,statistic,threshold,pass\n";
      out += "avoidance,total_violations,0," + std::to_string(r.violations.total()) + ",0,0," +
             (r.violations.ok() ? "true" : "false") + "\n";
      if (r.faithfulness) {
        for (const auto& t : r.faithfulness->tests) {
          out += "faithfulness," + t.name + "," + std::to_string(t.walker) + "," + decimal12(t.estimate) + "," +
                 decimal12(t.statistic) + "," + decimal12(t.threshold) + "," + (t.pass ? "true" : "false") + "\n";
        }
      }
      return out;
    }
    case Format::Text: {
      std::string out = violations_text(r.violations);
      if (r.faithfulness) out += tests_text(*r.faithfulness);
      return out;
    }
  }
  return {};
}

std::string write_report(const EmpiricalStats& s, Format f, const RunInfo& run) {
  const bool has_p = s.p > 0.0 && s.p < 1.0;
  const double taylor_limit = has_p ? -s.p * s.p * std::log(s.p) : 0.0;
  switch (f) {
    case Format::Json: {
      ordered_json walkers = ordered_json::array();
      for (std::uint32_t i = 1; i <= s.k; ++i) {
        ordered_json hist = ordered_json::array();
        for (std::size_t g = 1; g < s.gap_histogram[i].size(); ++g) hist.push_back(s.gap_histogram[i][g]);
        walkers.push_back({{"walker", i},
                           {"occurrences", s.occurrences[i]},
                           {"weight_sum", to_string(s.weight_sum[i])},
                           {"weight_rate", s.weight_rate[i]},
                           {"gap_histogram", hist},
                           {"gap_chi_square", {{"statistic", s.gap_test[i].statistic},
                                               {"dof", s.gap_test[i].dof},
                                               {"p_value", s.gap_test[i].p_value}}}});
      }
      ordered_json body{{"k", s.k},
                        {"length", s.length},
                        {"p", s.p},
                        {"blank_rate", s.blank_rate},
                        {"occupancy_rate", s.occupancy_rate},
                        {"weight_total", to_string(s.weight_total)},
                        {"weight_rate_total", s.weight_rate_total}};
      if (has_p) {
        body["expected_occupancy"] = s.k * s.p;
        body["weight_rate_lower_limit_per_walker"] = taylor_limit;
      }
      body["walkers"] = walkers;
      return json_out(run, body);
    }
    case Format::Csv: {
      std::string out = csv_comment(run) + "walker,occurrences,weight_rate,gap_chi2,gap_dof,gap_p_value,blank_rate,occupancy_rate\n";
      for (std::uint32_t i = 1; i <= s.k; ++i) {
        out += std::to_string(i) + "," + std::to_string(s.occurrences[i]) + "," + decimal12(s.weight_rate[i]) + "," +
               decimal12(s.gap_test[i].statistic) + "," + std::to_string(s.gap_test[i].dof) + "," +
               decimal12(s.gap_test[i].p_value) + "," + decimal12(s.blank_rate) + "," + decimal12(s.occupancy_rate) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out = "length: " + std::to_string(s.length) + "\n";
      out += "blank_rate: " + decimal12(s.blank_rate) + "\noccupancy_rate: " + decimal12(s.occupancy_rate) + "\n";
      out += "weight_total: " + to_string(s.weight_total) + "\nweight_rate_total: " + decimal12(s.weight_rate_total) + "\n";
      for (std::uint32_t i = 1; i <= s.k; ++i) {
        out += "walker " + std::to_string(i) + ": occurrences=" + std::to_string(s.occurrences[i]) +
               " weight_rate=" + decimal12(s.weight_rate[i]);
        if (has_p) out += " gap_p_value=" + decimal12(s.gap_test[i].p_value);
        out += "\n";
      }
      if (has_p) out += "per-walker lower limit -p^2 ln p: " + decimal12(taylor_limit) + "\n";
      return out;
    }
  }
  return {};
}

std::string write_report(const ScanReport& r, Format f, const RunInfo& run) {
  auto verdict = [](bool within) { return within ? "allowed" : "excluded"; };
  switch (f) {
    case Format::Json: {
      ordered_json points = ordered_json::array();
      for (const auto& pt : r.points) {
        points.push_back({{"p", to_string(pt.p)},
                          {"p_decimal", to_double(pt.p)},
                          {"status", status_name(pt.result.status)},
                          {"analytic_maxp_verdict", verdict(pt.within_analytic_bound)},
                          {"trivial_verdict", verdict(pt.within_trivial_bound)},
                          {"gap", pt.result.gap},
                          {"residual", pt.result.residual},
                          {"iterations", pt.result.iterations}});
      }
      return json_out(run, {{"k", r.k}, {"m", r.m}, {"analytic_max_p", r.analytic_max_p}, {"points", points}});
    }
    case Format::Csv: {
      std::string out = csv_comment(run) + "p,status,analytic_maxp_verdict,trivial_verdict,gap,residual\n";
      for (const auto& pt : r.points) {
        out += decimal12(to_double(pt.p)) + "," + std::string(status_name(pt.result.status)) + "," +
               verdict(pt.within_analytic_bound) + "," + verdict(pt.within_trivial_bound) + "," +
               decimal12(pt.result.gap) + "," + decimal12(pt.result.residual) + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::string out = "k=" + std::to_string(r.k) + " m=" + std::to_string(r.m) +
                        " analytic max p=" + decimal12(r.analytic_max_p) + "\n";
      for (const auto& pt : r.points) {
        out += "p=" + decimal12(to_double(pt.p)) + " " + std::string(status_name(pt.result.status)) +
               " analytic=" + verdict(pt.within_analytic_bound) + " trivial=" + verdict(pt.within_trivial_bound) + "\n";
      }
      return out;
    }
  }
  return {};
}

}  // namespace avoid
