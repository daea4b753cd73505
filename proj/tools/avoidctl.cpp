// avoidctl: command-line front end for the avoidance-coupling toolkit.
//
// Exit codes: 0 success / verified / feasible, 1 violation / counterexample /
// infeasible, 2 usage or domain error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "avoid/bounds.hpp"
#include "avoid/coupling_checks.hpp"
#include "avoid/error.hpp"
#include "avoid/feasibility.hpp"
#include "avoid/lemma.hpp"
#include "avoid/policy.hpp"
#include "avoid/report.hpp"
#include "avoid/sequence.hpp"
#include "avoid/statistics.hpp"
#include "avoid/trace.hpp"
#include "avoid/window_lp.hpp"

namespace {

using namespace avoid;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::uint32_t k = 1;
  std::int64_t n = 0;
  std::string p;
  std::size_t m = 1;
  std::size_t T = 0;
  std::uint64_t seed = 1;
  std::size_t max_len = 1;
  double tol = 0;
  std::string grid;
  std::string format = "text";
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string in;
  std::string out = "-";
  std::string seq;
  std::string policy;
  std::uint64_t terms = 10000;
  bool looped = false;
  bool waves = false;
  bool verify = false;
  unsigned max_lag = 16;
  unsigned window = 4;
};

std::string read_input(const std::string& path) {
  if (path.empty()) throw DomainError("an input is required (--in PATH, or - for stdin)");
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& data) {
  if (path == "-" || path.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << data;
}

Rational require_p(const Flags& fl) {
  if (fl.p.empty()) throw DomainError("--p is required");
  return parse_rational(fl.p);
}

Seq input_sequence(const Flags& fl) {
  if (!fl.seq.empty()) return parse_seq(fl.seq, fl.k);
  return parse_seq(read_input(fl.in), fl.k);
}

RunInfo run_info(const std::string& command, const Flags& fl, std::initializer_list<std::string> used) {
  RunInfo run;
  run.command = command;
  run.seed = fl.seed;
  auto value = [&](const std::string& name) -> std::string {
    if (name == "k") return std::to_string(fl.k);
    if (name == "n") return std::to_string(fl.n);
    if (name == "p") return fl.p;
    if (name == "m") return std::to_string(fl.m);
    if (name == "T") return std::to_string(fl.T);
    if (name == "seed") return std::to_string(fl.seed);
    if (name == "max-len") return std::to_string(fl.max_len);
    if (name == "tol") return decimal12(fl.tol);
    if (name == "grid") return fl.grid;
    if (name == "format") return fl.format;
    if (name == "jobs") return std::to_string(fl.jobs);
    if (name == "in") return fl.in;
    if (name == "out") return fl.out;
    if (name == "seq") return fl.seq;
    if (name == "policy") return fl.policy;
    if (name == "N") return std::to_string(fl.terms);
    if (name == "looped") return fl.looped ? "true" : "false";
    if (name == "waves") return fl.waves ? "true" : "false";
    if (name == "verify") return fl.verify ? "true" : "false";
    if (name == "max-lag") return std::to_string(fl.max_lag);
    if (name == "window") return std::to_string(fl.window);
    return {};
  };
  for (const auto& name : used) run.flags.emplace_back(name, value(name));
  return run;
}

int cmd_weights(const Flags& fl, Format f) {
  Seq s = input_sequence(fl);
  WeightReport w = total_weight(s);
  write_output(fl.out, write_report(s, w, f, run_info("weights", fl, {"k", "seq", "in", "format", "out"})));
  if (is_permissible(s) && w.total > Rational(static_cast<long long>(w.blanks))) return kExitViolation;
  return kExitOk;
}

int cmd_reduce(const Flags& fl, Format f) {
  RunInfo run = run_info("reduce", fl, {"k", "seq", "in", "verify", "format", "out"});
  ReductionCertificate c = fl.verify ? parse_certificate(read_input(fl.in)) : reduce_certificate(input_sequence(fl));
  CertificateCheck check = check_certificate(c);
  if (fl.verify && f == Format::Text) {
    write_output(fl.out, check.ok ? "OK " + to_string(check.proven_weight) + " <= " + std::to_string(check.proven_blanks) + "\n"
                                  : "INVALID " + check.diagnosis + "\n");
  } else {
    write_output(fl.out, write_report(c, check, f, run));
  }
  if (!check.ok) {
    std::cerr << "certificate check failed: " << check.diagnosis << "\n";
    return kExitViolation;
  }
  return kExitOk;
}

int cmd_verify_lemma(const Flags& fl, Format f) {
  ExhaustiveOptions opt;
  opt.k = fl.k;
  opt.max_len = fl.max_len;
  opt.jobs = fl.jobs;
  ExhaustiveReport r = verify_lemma_exhaustive(opt);
  write_output(fl.out, write_report(r, f, run_info("verify-lemma", fl, {"k", "max-len", "format", "out"})));
  return r.passed() ? kExitOk : kExitViolation;
}

int cmd_bound(const Flags& fl, Format f) {
  WalkerBound w = max_walkers(fl.n);
  nlohmann::ordered_json fields{{"n", fl.n},
                                {"max_walkers", w.value},
                                {"n_minus_log_n", w.n_minus_log_n},
                                {"intermediate", w.intermediate},
                                {"n_minus_2", fl.n - 2},
                                {"ambiguous", w.ambiguous}};
  write_output(fl.out, write_fields(fields, f, run_info("bound", fl, {"n", "format", "out"}), std::to_string(w.value)));
  if (w.ambiguous) std::cerr << "warning: n - ln n is within 1e-9 of an integer; the ceiling may be off by one\n";
  return kExitOk;
}

int cmd_maxp(const Flags& fl, Format f) {
  const double tol = fl.tol > 0 ? fl.tol : kDefaultRootTol;
  RootResult r = max_p(fl.k, tol);
  nlohmann::ordered_json fields{{"k", fl.k},
                                {"max_p", r.value},
                                {"residual", r.residual},
                                {"iterations", r.iterations},
                                {"trivial_bound", 1.0 / fl.k}};
  char text[40];
  std::snprintf(text, sizeof text, "%.15g", r.value);
  Flags shown = fl;
  shown.tol = tol;
  write_output(fl.out, write_fields(fields, f, run_info("maxp", shown, {"k", "tol", "format", "out"}), text));
  return kExitOk;
}

int cmd_taylor(const Flags& fl, Format f) {
  const double p = to_double(require_p(fl));
  const double partial = taylor_partial(p, fl.terms);
  nlohmann::ordered_json fields{{"p", p},
                                {"N", fl.terms},
                                {"partial_sum", partial},
                                {"limit", -p * p * std::log(p)},
                                {"tail_bound", taylor_tail_bound(p, fl.terms)}};
  char text[40];
  std::snprintf(text, sizeof text, "%.15g", partial);
  write_output(fl.out, write_fields(fields, f, run_info("taylor", fl, {"p", "N", "format", "out"}), text));
  return kExitOk;
}

int cmd_simulate(const Flags& fl) {
  if (fl.T < 1) throw DomainError("--T must be at least 1");
  const std::string& policy = fl.policy;
  if (policy == "independent" || policy == "trivial" || policy == "round-robin") {
    std::unique_ptr<CouplingPolicy> pol;
    if (policy == "round-robin") {
      pol = std::make_unique<RoundRobinPolicy>(fl.k);
    } else {
      const double p = to_double(require_p(fl));
      pol = policy == "trivial" ? trivial_k1(p) : std::make_unique<IndependentPolicy>(fl.k, p);
    }
    write_output(fl.out, serialize_trace(simulate(*pol, fl.T, fl.seed)));
    return kExitOk;
  }
  if (policy == "walkers") {
    if (fl.n < 1) throw DomainError("--n is required for walker policies");
    std::unique_ptr<WalkerPolicy> pol =
        std::make_unique<GreedyAvoidingWalkers>(static_cast<std::uint32_t>(fl.n), fl.k, fl.looped && !fl.waves);
    if (fl.waves) pol = staying_in_waves(std::move(pol));
    write_output(fl.out, serialize_trace(simulate(*pol, fl.T, fl.seed)));
    return kExitOk;
  }
  throw DomainError("unknown --policy '" + policy + "' (independent, trivial, round-robin, walkers)");
}

int cmd_check_trace(const Flags& fl, Format f) {
  AnyTrace trace = parse_trace(read_input(fl.in));
  TraceCheckReport rep;
  if (auto* wt = std::get_if<WalkerTrace>(&trace)) {
    rep.trace_kind = "walker";
    rep.violations = check_walker_avoidance(*wt);
  } else {
    const auto& ct = std::get<CouplingTrace>(trace);
    rep.trace_kind = "coupling";
    rep.violations = check_1avoidance(ct);
    if (!fl.p.empty()) {
      FaithfulnessParams params;
      params.max_lag = fl.max_lag;
      params.window = fl.window;
      rep.faithfulness = faithfulness_tests(ct, to_double(require_p(fl)), params);
    }
  }
  write_output(fl.out, write_report(rep, f, run_info("check-trace", fl, {"in", "p", "max-lag", "window", "format", "out"})));
  return rep.passed() ? kExitOk : kExitViolation;
}

int cmd_stats(const Flags& fl, Format f) {
  AnyTrace trace = parse_trace(read_input(fl.in));
  const auto* ct = std::get_if<CouplingTrace>(&trace);
  if (!ct) throw DomainError("stats expects an occupancy trace ('T k' header)");
  const double p = fl.p.empty() ? 0.0 : to_double(require_p(fl));
  EmpiricalStats st = empirical_stats(encode(*ct), p);
  write_output(fl.out, write_report(st, f, run_info("stats", fl, {"in", "p", "format", "out"})));
  return kExitOk;
}

int cmd_lp_build(const Flags& fl) {
  WindowLP lp = build_window_lp(fl.k, require_p(fl), fl.m);
  write_output(fl.out, export_mps(lp));
  return kExitOk;
}

int cmd_lp_scan(const Flags& fl, Format f) {
  if (fl.grid.empty()) throw DomainError("--grid is required (e.g. 0.1,0.2 or 0.05:0.5:0.05)");
  FeasibilityOptions opt;
  if (fl.tol > 0) opt.tol = fl.tol;
  ScanReport r = scan_p(fl.k, fl.m, parse_grid(fl.grid), fl.jobs, opt);
  Flags shown = fl;
  shown.tol = opt.tol;
  write_output(fl.out, write_report(r, f, run_info("lp-scan", shown, {"k", "m", "grid", "tol", "format", "out"})));
  return r.any_infeasible() ? kExitViolation : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification, simulation and bound computation for avoidance couplings of random walkers", "avoidctl"};
  app.require_subcommand(1, 1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Flags fl;

  auto* weights = app.add_subcommand("weights", "Neighbor pairs, weights and blank count of a sequence");
  auto* reduce = app.add_subcommand("reduce", "Reduction certificate for a permissible sequence (or --verify one)");
  auto* verify = app.add_subcommand("verify-lemma", "Exhaustively check weight <= blanks on short permissible sequences");
  auto* bound = app.add_subcommand("bound", "Upper bound ceil(n - ln n) on walkers of an avoidance coupling on K_n");
  auto* maxp = app.add_subcommand("maxp", "Largest p with p (1 - p ln p) <= 1/k");
  auto* taylor = app.add_subcommand("taylor", "Partial sum of p^2 (1-p)^b / b");
  auto* simulate_cmd = app.add_subcommand("simulate", "Write a simulated occupancy or walker trace");
  auto* check = app.add_subcommand("check-trace", "Avoidance (and optionally faithfulness) checks on a trace");
  auto* stats = app.add_subcommand("stats", "Blank rate, gap law and weight rates of an occupancy trace");
  auto* lp_build = app.add_subcommand("lp-build", "Export the window LP relaxation in free MPS format");
  auto* lp_scan = app.add_subcommand("lp-scan", "Solve the window LP relaxation over a grid of p");

  for (auto* sub : {weights, reduce, verify, bound, maxp, taylor, simulate_cmd, check, stats, lp_build, lp_scan}) {
    sub->add_option("--format", fl.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", fl.out, "Output path, - for stdout");
    sub->add_option("--seed", fl.seed, "Random seed (recorded in every report)");
    sub->add_option("--jobs", fl.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {weights, reduce, verify, maxp, simulate_cmd, lp_build, lp_scan}) {
    sub->add_option("--k", fl.k, "Number of walkers")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {weights, reduce, check, stats}) sub->add_option("--in", fl.in, "Input path, - for stdin");
  for (auto* sub : {weights, reduce}) sub->add_option("--seq", fl.seq, "Inline sequence, e.g. \"1 B 2\"");
  for (auto* sub : {taylor, simulate_cmd, check, stats, lp_build}) sub->add_option("--p", fl.p, "Bernoulli parameter (decimal or a/b)");
  for (auto* sub : {maxp, lp_scan}) sub->add_option("--tol", fl.tol, "Absolute tolerance");
  for (auto* sub : {lp_build, lp_scan}) sub->add_option("--m", fl.m, "Window length")->check(CLI::PositiveNumber);

  reduce->add_flag("--verify", fl.verify, "Treat --in as a certificate file and check it");
  verify->add_option("--max-len", fl.max_len, "Longest sequence length")->required();
  bound->add_option("--n", fl.n, "Number of vertices")->required();
  taylor->add_option("--N", fl.terms, "Number of terms")->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--policy", fl.policy, "independent, trivial, round-robin or walkers")->required();
  simulate_cmd->add_option("--T", fl.T, "Number of rows")->required();
  simulate_cmd->add_option("--n", fl.n, "Number of vertices (walkers policy)");
  simulate_cmd->add_flag("--looped", fl.looped, "Walk on K_n^* instead of K_n");
  simulate_cmd->add_flag("--waves", fl.waves, "Wrap the loopless walkers in staying-in-waves (K_n^*)");
  check->add_option("--max-lag", fl.max_lag, "Largest autocorrelation lag")->check(CLI::PositiveNumber);
  check->add_option("--window", fl.window, "Window length of the pattern chi-square")->check(CLI::Range(1, 16));
  lp_scan->add_option("--grid", fl.grid, "Comma list or lo:hi:step")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const Format f = parse_format(fl.format);
    if (*weights) return cmd_weights(fl, f);
    if (*reduce) return cmd_reduce(fl, f);
    if (*verify) return cmd_verify_lemma(fl, f);
    if (*bound) return cmd_bound(fl, f);
    if (*maxp) return cmd_maxp(fl, f);
    if (*taylor) return cmd_taylor(fl, f);
    if (*simulate_cmd) return cmd_simulate(fl);
    if (*check) return cmd_check_trace(fl, f);
    if (*stats) return cmd_stats(fl, f);
    if (*lp_build) return cmd_lp_build(fl);
    if (*lp_scan) return cmd_lp_scan(fl, f);
  } catch (const PreconditionError& e) {
    std::cerr << "avoidctl: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DomainError& e) {
    std::cerr << "avoidctl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetError& e) {
    std::cerr << "avoidctl: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "avoidctl: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
