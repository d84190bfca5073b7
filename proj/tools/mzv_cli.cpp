// mzv: evaluate (q-)multiple zeta values and connected sums, emit duality
// proof traces and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input or domain error,
// 3 convergence precondition not met.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mzv/index.hpp"
#include "mzv/scalar.hpp"
#include "mzv/series.hpp"
#include "mzv/suites.hpp"
#include "mzv/transport.hpp"

namespace {

constexpr int kVerificationFailed = 1;
constexpr int kDomainError = 2;
constexpr int kConvergenceError = 3;

struct EvalFlags {
  std::string q = "1";
  std::string x = "0";
  unsigned c = 0;
  std::optional<unsigned> trunc;
  std::optional<long> prec;
  bool exact = false;
  bool json = false;
};

mzv::Index cli_index(const std::string& text) {
  if (text.empty()) throw mzv::DomainError("the empty index is not accepted on the command line");
  return mzv::parse_index(text);
}

mpfr_prec_t precision_flag(const std::optional<long>& prec) {
  if (!prec) return mzv::default_precision();
  if (*prec < 53) throw mzv::DomainError("--prec must be at least 53 bits");
  return static_cast<mpfr_prec_t>(*prec);
}

mzv::EvalConfig config_from(const EvalFlags& f, const mzv::Scalar& q) {
  mzv::EvalConfig cfg = mzv::default_config(q);
  cfg.precision = precision_flag(f.prec);
  if (f.trunc) {
    if (*f.trunc == 0) throw mzv::DomainError("--trunc must be at least 1");
    cfg.truncation = *f.trunc;
  }
  cfg.regime = f.exact ? mzv::Regime::exact : mzv::Regime::floating;
  return cfg;
}

mzv::Params params_from(const EvalFlags& f) {
  const auto prec = precision_flag(f.prec);
  mzv::Scalar q = mzv::Scalar::parse(f.q, prec);
  mzv::Scalar x = mzv::Scalar::parse(f.x, prec);
  if (f.exact && (!q.is_exact() || !x.is_exact()))
    throw mzv::DomainError("--exact needs rational --q and --x (e.g. 1/2)");
  if (q.is_exact() != x.is_exact()) {
    q = q.to_float(prec);
    x = x.to_float(prec);
  }
  return mzv::Params(std::move(q), std::move(x));
}

int run_dual(const std::string& text) {
  std::cout << mzv::to_string(mzv::dual(cli_index(text))) << '\n';
  return 0;
}

int run_eval(const std::string& kind, const std::vector<std::string>& args, const EvalFlags& f) {
  const std::size_t needed = kind == "conn" ? 2 : 1;
  if (args.size() != needed)
    throw mzv::DomainError("eval " + kind + " takes " + std::to_string(needed) +
                           " index argument(s)");
  const mzv::Params params = params_from(f);
  const mzv::EvalConfig cfg = config_from(f, params.q());
  mzv::EvalResult result;
  if (kind == "zeta") {
    if (!params.q_is_one()) throw mzv::DomainError("eval zeta is the q = 1 case; use qzeta");
    result = mzv::eval_qmzv(cli_index(args[0]), params.q(), cfg);
  } else if (kind == "qzeta") {
    result = mzv::eval_qmzv(cli_index(args[0]), params.q(), cfg);
  } else if (kind == "conn") {
    result = mzv::eval_connected(cli_index(args[0]), cli_index(args[1]), params, cfg);
  } else if (kind == "gen") {
    result = mzv::eval_generating(cli_index(args[0]), params, cfg);
  } else if (kind == "ohno") {
    result = mzv::eval_ohno_sum(cli_index(args[0]), f.c, params.q(), cfg);
  } else {
    throw mzv::DomainError("unknown series kind '" + kind + "'");
  }

  if (f.json) {
    nlohmann::ordered_json j;
    j["kind"] = kind;
    j["args"] = args;
    j["q"] = params.q().to_string();
    j["x"] = params.x().to_string();
    if (kind == "ohno") j["c"] = f.c;
    j["regime"] = cfg.regime == mzv::Regime::exact ? "exact" : "float";
    j["precision"] = cfg.regime == mzv::Regime::exact ? 0 : cfg.precision;
    j["value"] = result.value.to_string();
    j["tail_estimate"] = result.tail_estimate.to_string();
    j["truncation"] = result.truncation_used;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "value:         " << result.value.to_string() << '\n'
              << "tail_estimate: " << result.tail_estimate.to_string() << " (heuristic)\n"
              << "truncation:    " << result.truncation_used << '\n';
  }
  return 0;
}

int run_prove(const std::string& text, bool verify, const EvalFlags& f,
              const std::optional<std::string>& tol) {
  const mzv::ProofTrace trace = mzv::prove_duality(cli_index(text));
  std::cout << mzv::to_json(trace).dump() << '\n';
  if (!verify) return 0;
  const mzv::Params params = params_from(f);
  const mzv::EvalConfig cfg = config_from(f, params.q());
  std::optional<mzv::Scalar> tolerance;
  if (tol) tolerance = mzv::Scalar::parse(*tol, cfg.precision);
  const auto report = mzv::verify_trace_numeric(trace, params, cfg, tolerance);
  std::cout << mzv::to_json(report, trace).dump() << '\n';
  return report.passed ? 0 : kVerificationFailed;
}

struct CheckFlags {
  unsigned max_weight = 6;
  unsigned max_c = 3;
  std::optional<std::string> grid;
  std::optional<unsigned> trunc;
  std::optional<std::string> tol;
  std::optional<long> prec;
  std::optional<unsigned> weight;
  std::optional<unsigned> depth;
  std::string q;
  std::string x;
  bool json = false;
};

int run_check(const std::string& suite, const CheckFlags& f) {
  mzv::SuiteOptions opts;
  opts.max_weight = f.max_weight;
  opts.max_c = f.max_c;
  opts.precision = precision_flag(f.prec);
  if (f.trunc) {
    if (*f.trunc == 0) throw mzv::DomainError("--trunc must be at least 1");
    opts.truncation = f.trunc;
  }
  if (f.tol) opts.tolerance = mzv::Scalar::parse(*f.tol, opts.precision);
  if (f.grid) opts.grid = mzv::parse_grid(*f.grid);
  if (!f.q.empty() || !f.x.empty()) {
    if (f.grid) throw mzv::DomainError("use either --grid or --q/--x");
    opts.grid = mzv::parse_grid((f.q.empty() ? "1" : f.q) + "," + (f.x.empty() ? "0" : f.x));
  }
  opts.weight = f.weight;
  opts.depth = f.depth;

  mzv::SuiteReport report;
  if (suite == "duality") {
    report = mzv::run_duality_suite(opts);
  } else if (suite == "ohno") {
    report = mzv::run_ohno_suite(opts);
  } else if (suite == "telescope") {
    report = mzv::run_telescope_suite(opts);
  } else if (suite == "sumformula") {
    report = mzv::run_sumformula_suite(opts);
  } else {
    throw mzv::DomainError("unknown suite '" + suite + "'");
  }

  if (f.json) {
    std::cout << mzv::to_json(report).dump(2) << '\n';
  } else {
    for (const auto& c : report.cases)
      std::cout << (c.passed ? "PASS " : "FAIL ") << c.input
                << "  deviation=" << c.deviation.to_string()
                << "  tolerance=" << c.tolerance.to_string() << '\n';
    std::cout << report.suite << ": " << report.passed_count() << '/' << report.cases.size()
              << " passed\n";
  }
  return report.passed() ? 0 : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiple zeta values, connected sums and duality proof traces"};
  app.require_subcommand(1);

  std::string index_text;
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual of an admissible index");
  dual_cmd->add_option("index", index_text, "Index such as 1,2")->required();

  std::string kind;
  std::vector<std::string> eval_args;
  EvalFlags eval_flags;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a truncated series");
  eval_cmd->add_option("kind", kind, "zeta | qzeta | conn | gen | ohno")
      ->required()
      ->check(CLI::IsMember({"zeta", "qzeta", "conn", "gen", "ohno"}));
  eval_cmd->add_option("indices", eval_args, "Index arguments (conn takes two)")->required();
  auto add_eval_flags = [](CLI::App* cmd, EvalFlags& f) {
    cmd->add_option("--q", f.q, "q in (0,1]; rational (1/2) or decimal");
    cmd->add_option("--x", f.x, "x in (-1,1)");
    cmd->add_option("--trunc", f.trunc, "Truncation M (default 2000 at q=1, 200 for q<=3/4)");
    cmd->add_option("--prec", f.prec, "Float precision in bits (>= 53)");
    cmd->add_flag("--exact", f.exact, "Exact rational arithmetic");
  };
  add_eval_flags(eval_cmd, eval_flags);
  eval_cmd->add_option("--c", eval_flags.c, "Elevation weight for ohno");
  eval_cmd->add_flag("--json", eval_flags.json, "JSON output");

  EvalFlags prove_flags;
  bool verify = false;
  std::optional<std::string> prove_tol;
  auto* prove_cmd = app.add_subcommand("prove", "Emit the duality proof trace as JSON");
  prove_cmd->add_option("index", index_text, "Admissible index")->required();
  prove_cmd->add_flag("--verify", verify, "Evaluate every state and report the spread");
  prove_cmd->add_option("--tol", prove_tol, "Tolerance for --verify");
  add_eval_flags(prove_cmd, prove_flags);

  std::string suite;
  CheckFlags check_flags;
  auto* check_cmd = app.add_subcommand("check", "Run a verification suite");
  check_cmd->add_option("suite", suite, "duality | ohno | telescope | sumformula")
      ->required()
      ->check(CLI::IsMember({"duality", "ohno", "telescope", "sumformula"}));
  check_cmd->add_option("--max-weight", check_flags.max_weight, "Largest weight swept");
  check_cmd->add_option("--max-c", check_flags.max_c, "Largest elevation c (ohno)");
  check_cmd->add_option("--grid", check_flags.grid, "q,x pairs separated by ';'");
  check_cmd->add_option("--q", check_flags.q, "Single q (instead of --grid)");
  check_cmd->add_option("--x", check_flags.x, "Single x (instead of --grid)");
  check_cmd->add_option("--trunc", check_flags.trunc, "Truncation M");
  check_cmd->add_option("--tol", check_flags.tol, "Absolute tolerance per case");
  check_cmd->add_option("--prec", check_flags.prec, "Float precision in bits (>= 53)");
  check_cmd->add_option("--weight", check_flags.weight, "Sum formula: single weight");
  check_cmd->add_option("--depth", check_flags.depth, "Sum formula: single depth");
  check_cmd->add_flag("--json", check_flags.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kDomainError;
  }

  try {
    if (*dual_cmd) return run_dual(index_text);
    if (*eval_cmd) return run_eval(kind, eval_args, eval_flags);
    if (*prove_cmd) return run_prove(index_text, verify, prove_flags, prove_tol);
    if (*check_cmd) return run_check(suite, check_flags);
  } catch (const mzv::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConvergenceError;
  } catch (const mzv::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomainError;
  }
  return kDomainError;
}
