#include "avoid/lemma.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "avoid/error.hpp"

namespace avoid {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::CollapseBlanks: return "CollapseBlanks";
    case Rule::DeleteZeroWeightPair: return "DeleteZeroWeightPair";
    case Rule::CollapseWeightOnePair: return "CollapseWeightOnePair";
    case Rule::DeleteVictimSymbol: return "DeleteVictimSymbol";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (Rule r : {Rule::CollapseBlanks, Rule::DeleteZeroWeightPair, Rule::CollapseWeightOnePair,
                 Rule::DeleteVictimSymbol}) {
    if (rule_name(r) == name) return r;
  }
  throw DomainError("unknown reduction rule '" + std::string(name) + "'");
}

namespace {

/// Sorted distinct symbols strictly between two 1-based positions.
std::vector<std::uint32_t> symbols_between(const Seq& s, std::size_t t1, std::size_t t2) {
  std::vector<char> seen(s.k() + 1, 0);
  for (std::size_t u = t1 + 1; u < t2; ++u) seen[s.at(u).index()] = 1;
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x <= s.k(); ++x) {
    if (seen[x]) out.push_back(x);
  }
  return out;
}

bool walker_at(const Seq& s, std::size_t t) { return t >= 1 && t <= s.size() && s.at(t).is_walker(); }
bool blank_at(const Seq& s, std::size_t t) { return t >= 1 && t <= s.size() && s.at(t).is_blank(); }

std::size_t find_double_blank(const Seq& s) {
  for (std::size_t t = 2; t <= s.size(); ++t) {
    if (blank_at(s, t - 1) && blank_at(s, t)) return t;
  }
  return 0;
}

std::size_t find_zero_weight_pair(const Seq& s) {
  for (std::size_t t = 2; t <= s.size(); ++t) {
    if (walker_at(s, t) && s.at(t - 1) == s.at(t)) return t;
  }
  return 0;
}

std::size_t find_weight_one_pair(const Seq& s) {
  for (std::size_t t = 1; t + 2 <= s.size(); ++t) {
    if (walker_at(s, t) && blank_at(s, t + 1) && s.at(t + 2) == s.at(t)) return t;
  }
  return 0;
}

bool contains_symbol(const Seq& s, std::uint32_t j) {
  return std::any_of(s.symbols().begin(), s.symbols().end(),
                     [j](Symbol a) { return a.index() == j; });
}

}  // namespace

RedistributionReport redistribution(const Seq& s) {
  RedistributionReport r;
  r.k = s.k();
  r.pairs = neighbor_pairs(s);
  r.input.assign(s.k() + 1, Rational(0));
  r.output.assign(s.k() + 1, Rational(0));
  for (std::size_t n = 0; n < r.pairs.size(); ++n) {
    const NeighborPair& p = r.pairs[n];
    if (p.b <= 1) {
      throw PreconditionError("redistribution needs every pair to have b >= 2; pair (" +
                              std::to_string(p.t1) + "," + std::to_string(p.t2) + ") has b = " +
                              std::to_string(p.b));
    }
    auto between = symbols_between(s, p.t1, p.t2);
    if (between.empty() || between.front() != 0) {
      throw PreconditionError("pair (" + std::to_string(p.t1) + "," + std::to_string(p.t2) +
                              ") has no blank between its endpoints");
    }
    r.output[p.symbol] += p.weight;
    Rational amount(1, static_cast<long long>(p.b) * (p.b - 1));
    for (std::uint32_t x : between) {
      if (x == 0) continue;
      r.input[x] += amount;
      r.donations.push_back(Donation{n, x, amount});
    }
  }
  return r;
}

bool is_terminal(const Seq& s) {
  for (Symbol a : s.symbols()) {
    if (a.is_walker()) return false;
  }
  return find_double_blank(s) == 0;
}

Seq apply_edit(const Seq& s, Rule rule, std::size_t position, std::uint32_t victim) {
  std::vector<Symbol> out(s.symbols().begin(), s.symbols().end());
  auto require = [&](bool ok) {
    if (!ok) {
      throw DomainError(std::string(rule_name(rule)) + " edit out of range at position " +
                        std::to_string(position));
    }
  };
  switch (rule) {
    case Rule::CollapseBlanks:
    case Rule::DeleteZeroWeightPair:
      require(position >= 1 && position <= out.size());
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(position - 1));
      break;
    case Rule::CollapseWeightOnePair:
      require(position >= 1 && position + 2 <= out.size());
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(position),
                out.begin() + static_cast<std::ptrdiff_t>(position + 2));
      break;
    case Rule::DeleteVictimSymbol:
      if (victim < 1 || victim > s.k()) {
        throw DomainError("victim " + std::to_string(victim) + " outside [1, k]");
      }
      std::erase_if(out, [victim](Symbol a) { return a.index() == victim; });
      break;
  }
  return Seq(s.k(), std::move(out));
}

ReductionStep reduce_step(const Seq& s) {
  if (is_terminal(s)) throw PreconditionError("terminal sequence: no reduction rule applies");
  ReductionStep step;
  step.before = s;
  if (std::size_t t = find_double_blank(s)) {
    step.rule = Rule::CollapseBlanks;
    step.position = t;
    step.weight_delta = 0;
    step.blank_delta = -1;
  } else if (std::size_t t = find_zero_weight_pair(s)) {
    step.rule = Rule::DeleteZeroWeightPair;
    step.position = t;
    step.weight_delta = 0;
    step.blank_delta = 0;
  } else if (std::size_t t = find_weight_one_pair(s)) {
    step.rule = Rule::CollapseWeightOnePair;
    step.position = t;
    step.weight_delta = -1;
    step.blank_delta = -1;
  } else {
    RedistributionReport r = redistribution(s);
    std::uint32_t victim = 0;
    for (std::uint32_t j = 1; j <= s.k(); ++j) {
      if (contains_symbol(s, j) && r.input[j] >= r.output[j]) {
        victim = j;
        break;
      }
    }
    if (victim == 0) {
      // Inputs and outputs have equal sums, so this cannot happen.
      throw std::logic_error("no admissible victim in " + to_string(s));
    }
    step.rule = Rule::DeleteVictimSymbol;
    step.victim = victim;
    step.weight_delta = r.input[victim] - r.output[victim];
    step.blank_delta = 0;
    step.redistribution = std::move(r);
  }
  step.after = apply_edit(s, step.rule, step.position, step.victim);
  return step;
}

ReductionCertificate reduce_certificate(const Seq& s) {
  if (!is_permissible(s)) throw PreconditionError("sequence is not permissible: " + to_string(s));
  ReductionCertificate c;
  c.initial = s;
  Seq cur = s;
  while (!is_terminal(cur)) {
    c.steps.push_back(reduce_step(cur));
    cur = c.steps.back().after;
  }
  c.final_seq = std::move(cur);
  return c;
}

namespace {

std::string check_victim_step(const ReductionStep& step, std::size_t index) {
  const std::string where = "step " + std::to_string(index + 1) + ": ";
  std::uint32_t j = step.victim;
  if (!contains_symbol(step.before, j)) return where + "victim does not occur";
  RedistributionReport r;
  try {
    r = redistribution(step.before);
  } catch (const PreconditionError& e) {
    return where + "victim deletion before full reduction (" + e.what() + ")";
  }
  if (!step.redistribution) return where + "missing redistribution table";
  if (!(*step.redistribution == r)) return where + "redistribution table does not match recomputation";
  Rational in_sum = 0, out_sum = 0;
  for (std::uint32_t x = 1; x <= r.k; ++x) {
    in_sum += r.input[x];
    out_sum += r.output[x];
  }
  Rational w = total_weight(step.before).total;
  if (in_sum != w || out_sum != w) return where + "input/output sums differ from total weight";
  for (std::size_t n = 0; n < r.pairs.size(); ++n) {
    Rational given = 0;
    for (const auto& d : r.donations) {
      if (d.pair_index == n) {
        if (d.recipient == r.pairs[n].symbol) return where + "pair donates to its own symbol";
        given += d.amount;
      }
    }
    if (given != r.pairs[n].weight) return where + "pair donations do not sum to its weight";
  }
  if (r.input[j] < r.output[j]) {
    return where + "victim " + std::to_string(j) + " is not admissible (input " + to_string(r.input[j]) +
           " < output " + to_string(r.output[j]) + ")";
  }
  if (step.weight_delta != r.input[j] - r.output[j]) return where + "weight_delta differs from input - output";

  // Every surviving pair gains exactly what it donated to j.
  std::vector<NeighborPair> after_pairs = neighbor_pairs(step.after);
  std::size_t a = 0;
  for (std::size_t n = 0; n < r.pairs.size(); ++n) {
    if (r.pairs[n].symbol == j) continue;
    if (a >= after_pairs.size() || after_pairs[a].symbol != r.pairs[n].symbol) {
      return where + "surviving pairs do not correspond one-to-one";
    }
    Rational donated = 0;
    for (const auto& d : r.donations) {
      if (d.pair_index == n && d.recipient == j) donated += d.amount;
    }
    if (after_pairs[a].weight - r.pairs[n].weight != donated) {
      return where + "pair (" + std::to_string(r.pairs[n].t1) + "," + std::to_string(r.pairs[n].t2) +
             ") gain differs from its donation to the victim";
    }
    ++a;
  }
  if (a != after_pairs.size()) return where + "surviving pairs do not correspond one-to-one";
  return {};
}

}  // namespace

CertificateCheck check_certificate(const ReductionCertificate& c) {
  CertificateCheck result;
  auto fail = [&](std::string why) {
    result.ok = false;
    result.diagnosis = std::move(why);
    return result;
  };
  if (!is_permissible(c.initial)) return fail("initial sequence is not permissible");

  Seq cur = c.initial;
  Rational weight_sum = 0;
  std::int64_t blank_sum = 0;
  for (std::size_t n = 0; n < c.steps.size(); ++n) {
    const ReductionStep& step = c.steps[n];
    const std::string where = "step " + std::to_string(n + 1) + ": ";
    if (!(step.before == cur)) return fail(where + "does not start where the previous step ended");
    const std::size_t t = step.position;
    switch (step.rule) {
      case Rule::CollapseBlanks:
        if (!(blank_at(cur, t - 1) && blank_at(cur, t))) return fail(where + "no BB at position");
        break;
      case Rule::DeleteZeroWeightPair:
        if (!(t >= 2 && walker_at(cur, t) && cur.at(t - 1) == cur.at(t))) {
          return fail(where + "no adjacent equal pair at position");
        }
        break;
      case Rule::CollapseWeightOnePair:
        if (!(walker_at(cur, t) && blank_at(cur, t + 1) && t + 2 <= cur.size() && cur.at(t + 2) == cur.at(t))) {
          return fail(where + "no i B i pattern at position");
        }
        break;
      case Rule::DeleteVictimSymbol:
        if (step.victim < 1 || step.victim > cur.k()) return fail(where + "victim outside [1, k]");
        break;
    }
    Seq expected = apply_edit(cur, step.rule, step.position, step.victim);
    if (!(step.after == expected)) return fail(where + "after-sequence does not match the edit");
    if (expected.size() >= cur.size()) return fail(where + "does not shorten the sequence");

    Rational dw = total_weight(expected).total - total_weight(cur).total;
    auto db = static_cast<std::int64_t>(blank_count(expected)) - static_cast<std::int64_t>(blank_count(cur));
    if (dw != step.weight_delta) {
      return fail(where + "weight_delta " + to_string(step.weight_delta) + " but recomputed " + to_string(dw));
    }
    if (db != step.blank_delta) {
      return fail(where + "blank_delta " + std::to_string(step.blank_delta) + " but recomputed " + std::to_string(db));
    }
    switch (step.rule) {
      case Rule::CollapseBlanks:
        if (dw != 0 || db != -1) return fail(where + "CollapseBlanks contract violated");
        break;
      case Rule::DeleteZeroWeightPair:
        if (dw != 0 || db != 0) return fail(where + "DeleteZeroWeightPair contract violated");
        break;
      case Rule::CollapseWeightOnePair:
        if (dw != -1 || db != -1) return fail(where + "CollapseWeightOnePair contract violated");
        break;
      case Rule::DeleteVictimSymbol:
        if (db != 0) return fail(where + "victim deletion changed the blank count");
        if (auto why = check_victim_step(step, n); !why.empty()) return fail(why);
        break;
    }
    if (step.rule != Rule::DeleteVictimSymbol && step.redistribution) {
      return fail(where + "unexpected redistribution table");
    }
    // Induction step: W(before) - W(after) <= B(before) - B(after).
    if (step.weight_delta < Rational(step.blank_delta)) return fail(where + "weight falls faster than blanks");
    weight_sum += step.weight_delta;
    blank_sum += step.blank_delta;
    cur = expected;
  }
  if (!(c.final_seq == cur)) return fail("final sequence does not match the last step");
  if (!is_terminal(cur)) return fail("final sequence is not terminal");
  Rational final_weight = total_weight(cur).total;
  if (final_weight != 0) return fail("final sequence has nonzero weight");

  result.proven_weight = final_weight - weight_sum;
  result.proven_blanks = static_cast<std::int64_t>(blank_count(cur)) - blank_sum;
  if (result.proven_weight != total_weight(c.initial).total ||
      result.proven_blanks != static_cast<std::int64_t>(blank_count(c.initial))) {
    return fail("unwound chain does not reproduce the initial weight and blank count");
  }
  if (result.proven_weight > Rational(result.proven_blanks)) return fail("unwound chain violates weight <= blanks");
  result.ok = true;
  return result;
}

namespace {

void check_one(const Seq& s, ExhaustiveReport& rep, std::size_t keep) {
  ++rep.sequences_checked;
  ++rep.per_length[s.size()];
  WeightReport w = total_weight(s);
  Rational blanks(static_cast<long long>(w.blanks));
  if (w.total > blanks) {
    if (rep.counterexamples.size() < keep) rep.counterexamples.push_back(s);
    ++rep.counterexample_count;
  } else if (w.total == blanks) {
    ++rep.tight;
  }
  std::string failure;
  try {
    ReductionCertificate c = reduce_certificate(s);
    CertificateCheck chk = check_certificate(c);
    if (!chk) {
      failure = chk.diagnosis;
    } else if (chk.proven_weight != w.total || chk.proven_blanks != static_cast<std::int64_t>(w.blanks)) {
      failure = "certificate and direct computation disagree";
    }
    rep.certificate_steps += c.steps.size();
    rep.max_steps = std::max(rep.max_steps, c.steps.size());
    for (const auto& st : c.steps) rep.victim_steps += st.rule == Rule::DeleteVictimSymbol;
  } catch (const std::exception& e) {
    failure = e.what();
  }
  if (!failure.empty()) {
    if (rep.certificate_failures.size() < keep) rep.certificate_failures.emplace_back(s, failure);
    ++rep.certificate_failure_count;
  }
}

void enumerate_from(std::vector<Symbol>& prefix, const ExhaustiveOptions& opt, ExhaustiveReport& rep) {
  check_one(Seq(opt.k, prefix), rep, opt.keep_failures);
  if (prefix.size() == opt.max_len) return;
  for (std::uint32_t x = 0; x <= opt.k; ++x) {
    Symbol next = x == 0 ? Symbol::blank() : Symbol::walker(x);
    Symbol last = prefix.back();
    if (last.is_walker() && next.is_walker() && last.index() > next.index()) continue;
    prefix.push_back(next);
    enumerate_from(prefix, opt, rep);
    prefix.pop_back();
  }
}

}  // namespace

ExhaustiveReport verify_lemma_exhaustive(const ExhaustiveOptions& opt) {
  if (opt.k < 1) throw DomainError("walker count k must be at least 1");
  double words = 0;
  std::uint64_t words_exact = 0;
  for (std::size_t len = 1; len <= opt.max_len; ++len) {
    double w = std::pow(static_cast<double>(opt.k) + 1.0, static_cast<double>(len));
    words += w;
    if (words > opt.budget) {
      throw BudgetError("enumeration of " + std::to_string(opt.max_len) + "-symbol words over k = " +
                        std::to_string(opt.k) + " exceeds the budget");
    }
    words_exact += static_cast<std::uint64_t>(w);
  }

  // One task per first symbol; merging in task order keeps lexicographic order.
  const std::uint32_t tasks = opt.max_len == 0 ? 0 : opt.k + 1;
  std::vector<ExhaustiveReport> parts(tasks);
  for (auto& p : parts) p.per_length.assign(opt.max_len + 1, 0);
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t task = next++; task < tasks; task = next++) {
      std::vector<Symbol> prefix{task == 0 ? Symbol::blank() : Symbol::walker(task)};
      enumerate_from(prefix, opt, parts[task]);
    }
  };
  unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, tasks == 0 ? 1 : tasks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned n = 0; n < jobs; ++n) pool.emplace_back(worker);
  }

  ExhaustiveReport rep;
  rep.k = opt.k;
  rep.max_len = opt.max_len;
  rep.words_considered = words_exact;
  rep.per_length.assign(opt.max_len + 1, 0);
  for (auto& p : parts) {
    rep.sequences_checked += p.sequences_checked;
    for (std::size_t len = 0; len <= opt.max_len; ++len) rep.per_length[len] += p.per_length[len];
    rep.tight += p.tight;
    rep.certificate_steps += p.certificate_steps;
    rep.victim_steps += p.victim_steps;
    rep.max_steps = std::max(rep.max_steps, p.max_steps);
    rep.counterexample_count += p.counterexample_count;
    rep.certificate_failure_count += p.certificate_failure_count;
    for (auto& s : p.counterexamples) {
      if (rep.counterexamples.size() < opt.keep_failures) rep.counterexamples.push_back(std::move(s));
    }
    for (auto& f : p.certificate_failures) {
      if (rep.certificate_failures.size() < opt.keep_failures) rep.certificate_failures.push_back(std::move(f));
    }
  }
  return rep;
}

}  // namespace avoid
