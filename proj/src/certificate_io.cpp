#include <charconv>
#include <sstream>
#include <vector>

#include "avoid/error.hpp"
#include "avoid/lemma.hpp"

namespace avoid {

std::string serialize_certificate(const ReductionCertificate& c) {
  std::string out = std::to_string(c.initial.k()) + " " + std::to_string(c.initial.size()) + "\n";
  out += to_string(c.initial) + "\n";
  for (const auto& step : c.steps) {
    out += rule_name(step.rule);
    out += ' ';
    out += std::to_string(step.rule == Rule::DeleteVictimSymbol ? step.victim : step.position);
    out += ' ';
    out += to_string(step.weight_delta);
    out += ' ';
    out += std::to_string(step.blank_delta);
    out += '\n';
  }
  out += to_string(c.final_seq) + "\n";
  return out;
}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string line(text.substr(pos, nl - pos));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    pos = nl + 1;
  }
  return lines;
}

template <class T>
T parse_integer(const std::string& token, const char* what) {
  T value{};
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw DomainError(std::string("malformed ") + what + " '" + token + "' in certificate");
  }
  return value;
}

}  // namespace

ReductionCertificate parse_certificate(std::string_view text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.size() < 3) throw DomainError("certificate needs a header, an initial and a final line");

  std::istringstream header(lines[0]);
  std::string k_tok, t_tok, extra;
  if (!(header >> k_tok >> t_tok) || (header >> extra)) throw DomainError("certificate header must be 'k T'");
  auto k = parse_integer<std::uint32_t>(k_tok, "k");
  auto length = parse_integer<std::size_t>(t_tok, "T");

  ReductionCertificate c;
  c.initial = parse_seq(lines[1], k);
  if (c.initial.size() != length) throw DomainError("certificate header length does not match initial sequence");

  Seq cur = c.initial;
  for (std::size_t n = 2; n + 1 < lines.size(); ++n) {
    std::istringstream in(lines[n]);
    std::string rule_tok, where_tok, dw_tok, db_tok;
    if (!(in >> rule_tok >> where_tok >> dw_tok >> db_tok) || (in >> extra)) {
      throw DomainError("malformed certificate step on line " + std::to_string(n + 1));
    }
    ReductionStep step;
    step.rule = parse_rule(rule_tok);
    auto where = parse_integer<std::size_t>(where_tok, "position");
    if (step.rule == Rule::DeleteVictimSymbol) {
      step.victim = static_cast<std::uint32_t>(where);
    } else {
      step.position = where;
    }
    step.weight_delta = parse_rational(dw_tok);
    step.blank_delta = parse_integer<std::int64_t>(db_tok, "blank_delta");
    step.before = cur;
    step.after = apply_edit(cur, step.rule, step.position, step.victim);
    if (step.rule == Rule::DeleteVictimSymbol) {
      try {
        step.redistribution = redistribution(cur);
      } catch (const PreconditionError&) {
        // Left empty; check_certificate reports the misplaced victim step.
      }
    }
    cur = step.after;
    c.steps.push_back(std::move(step));
  }
  c.final_seq = parse_seq(lines.back(), k);
  return c;
}

}  // namespace avoid
