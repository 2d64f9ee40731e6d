#include "qaw/cli/commands.hpp"

#include <atomic>
#include <csignal>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "qaw/cli/report_io.hpp"
#include "qaw/errors.hpp"
#include "qaw/identities.hpp"
#include "qaw/qops.hpp"

namespace qaw::cli {

namespace {

std::atomic<bool> g_interrupted{false};

extern "C" void on_sigint(int) { g_interrupted = true; }

// String-valued options of one subcommand, read lazily.
class Args {
 public:
  explicit Args(CLI::App* app) : app_(app) {}

  void add(const std::string& name, const std::string& help) {
    app_->add_option("--" + name, values_[name], help)->allow_extra_args(false);
  }
  bool has(const std::string& name) const { return app_->count("--" + name) > 0; }
  std::string raw(const std::string& name) const {
    if (!has(name)) throw UsageError("missing --" + name);
    return values_.at(name);
  }
  Complex complex(const std::string& name) const { return parse_complex(raw(name)); }
  Complex complex_or(const std::string& name, Complex fallback) const {
    return has(name) ? complex(name) : fallback;
  }
  double real(const std::string& name) const {
    const Complex v = complex(name);
    if (v.imag() != 0.0) throw UsageError("--" + name + " must be real");
    return v.real();
  }
  double real_or(const std::string& name, double fallback) const { return has(name) ? real(name) : fallback; }
  int integer(const std::string& name) const {
    const double v = real(name);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw UsageError("--" + name + " must be an integer");
    return static_cast<int>(v);
  }
  std::vector<std::pair<std::string, std::string>> given() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& [k, v] : values_)
      if (has(k)) out.emplace_back(k, v);
    return out;
  }

 private:
  CLI::App* app_;
  std::map<std::string, std::string> values_;
};

// "1", "t", "t^N"
RealIntegrand parse_monomial(const std::string& f) {
  if (f == "1") return [](double) { return Complex(1.0); };
  if (f == "t") return [](double t) { return Complex(t); };
  if (f.rfind("t^", 0) == 0) {
    int n = -1;
    try {
      std::size_t used = 0;
      n = std::stoi(f.substr(2), &used);
      if (used != f.size() - 2) n = -1;
    } catch (const std::exception&) {
      n = -1;
    }
    if (n >= 0) return [n](double t) { return Complex(std::pow(t, n)); };
  }
  throw UsageError("--f must be 1, t or t^N with integer N >= 0 (got '" + f + "')");
}

struct EvalOutput {
  Complex value;
  std::vector<std::pair<std::string, std::string>> details;
};

EvalOutput eval_subject(const std::string& subject, const Args& args, const QContext& base) {
  const QContext ctx = base.with_base(args.real_or("q", 0.5));
  EvalOutput out;
  if (subject == "poch") {
    const Complex a = args.complex("a");
    const int chosen = args.has("n") + args.has("alpha") + args.has("inf");
    if (chosen != 1) throw UsageError("poch needs exactly one of --n, --alpha, --inf");
    const PochOrder order = args.has("n")       ? PochOrder::finite(args.integer("n"))
                            : args.has("alpha") ? PochOrder::real(args.real("alpha"))
                                                : PochOrder::infinite();
    ProductTrace trace;
    out.value = q_pochhammer(a, order, ctx, &trace);
    out.details.emplace_back("factors", std::to_string(trace.factors));
  } else if (subject == "gamma") {
    out.value = q_gamma(args.real("x"), ctx);
  } else if (subject == "phi") {
    const HypergeometricSpec spec(parse_complex_list(args.has("numer") ? args.raw("numer") : ""),
                                  parse_complex_list(args.has("denom") ? args.raw("denom") : ""),
                                  args.complex("z"), ctx.q);
    const SeriesResult r = phi_series_eval(spec, ctx);
    out.value = r.value;
    out.details.emplace_back("terms", std::to_string(r.terms));
    if (spec.terminating_order()) out.details.emplace_back("terminating_k", std::to_string(*spec.terminating_order()));
  } else if (subject == "hcos") {
    const std::vector<Complex> params = parse_complex_list(args.raw("params"));
    out.value = h_cos(args.real("theta"), params, ctx);
  } else if (subject == "hsinh") {
    const LogValue v = h_sinh_log(args.real("x"), args.complex("t"), ctx);
    out.details.emplace_back("log_abs", format_complex(v.log_abs));
    out.details.emplace_back("arg", format_complex(v.arg));
    out.value = h_sinh(args.real("x"), args.complex("t"), ctx);
  } else if (subject == "qint") {
    const SeriesResult r = jackson_q_integral(parse_monomial(args.raw("f")), args.real_or("a", 0.0),
                                              args.real("b"), ctx);
    out.value = r.value;
    out.details.emplace_back("terms", std::to_string(r.terms));
  } else if (subject == "fracint") {
    const SeriesResult r = fractional_q_integral(parse_monomial(args.raw("f")), args.real("x"),
                                                 args.real_or("a", 0.0), FractionalOrder(args.real("mu")), ctx);
    out.value = r.value;
    out.details.emplace_back("terms", std::to_string(r.terms));
  } else {
    throw UsageError("unknown eval subject '" + subject + "'");
  }
  return out;
}

int write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text) || !f.flush()) {
    err << "qaw: cannot write '" << path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical checks of fractional q-integral identities", "qaw"};
  app.require_subcommand(1);
  app.fallthrough();

  CheckSettings settings;
  app.add_option("--ctx-eps", settings.ctx.eps_term, "relative series tail tolerance")->check(CLI::PositiveNumber);
  app.add_option("--ctx-max-terms", settings.ctx.max_terms, "series and k-sum term cap")->check(CLI::PositiveNumber);

  // eval
  CLI::App* eval = app.add_subcommand("eval", "evaluate a scalar primitive");
  std::string subject;
  eval->add_option("subject", subject, "poch | gamma | phi | hcos | hsinh | qint | fracint")
      ->required()
      ->check(CLI::IsMember({"poch", "gamma", "phi", "hcos", "hsinh", "qint", "fracint"}));
  bool verbose = false;
  eval->add_flag("--verbose,-v", verbose, "print diagnostics");
  Args eval_args(eval);
  for (const auto& [name, help] : std::vector<std::pair<std::string, std::string>>{
           {"a", "parameter a / lower limit"},
           {"b", "upper limit"},
           {"q", "base, default 0.5"},
           {"n", "integer order"},
           {"alpha", "real order"},
           {"x", "point"},
           {"t", "h(i sinh x; t) parameter"},
           {"theta", "angle"},
           {"params", "comma-separated h(cos theta; ...) parameters"},
           {"numer", "comma-separated numerator parameters"},
           {"denom", "comma-separated denominator parameters"},
           {"z", "series argument"},
           {"f", "integrand: 1, t or t^N"},
           {"mu", "fractional order"}})
    eval_args.add(name, help);
  bool infinite = false;
  eval->add_flag("--inf", infinite, "infinite order");

  // check
  CLI::App* check = app.add_subcommand("check", "run one identity check");
  std::string identity;
  check->add_option("identity", identity, "registry name")->required();
  std::string tol_text;
  check->add_option("--tol", tol_text, "tolerance (default per identity)");
  Args check_args(check);
  for (const char* name : {"a", "b", "c", "d", "r", "s", "t", "u", "z", "x", "mu", "q", "alpha-g", "n-max"})
    check_args.add(name, "identity parameter");

  // suite
  CLI::App* suite = app.add_subcommand("suite", "run a suite specification");
  std::string spec_path;
  std::string out_path;
  suite->add_option("--spec", spec_path, "suite specification (JSON)")->required();
  suite->add_option("--out", out_path, "report path (default: spec 'output', else stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o;
    std::ostringstream ee;
    const int code = app.exit(e, o, ee);
    out << o.str();
    err << ee.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    settings.ctx.validate();
    if (*eval) {
      const EvalOutput r = eval_subject(subject, eval_args, settings.ctx);
      out << format_complex(r.value) << "\n";
      if (verbose)
        for (const auto& [k, v] : r.details) out << k << ": " << v << "\n";
      return kExitOk;
    }
    if (*check) {
      const CheckEntry* entry = find_check(identity);
      if (!entry) throw UsageError("unknown identity '" + identity + "'; registry: " + registry_names());
      ParamMap values;
      for (const auto& [k, v] : check_args.given()) {
        std::string key = k;
        std::replace(key.begin(), key.end(), '-', '_');
        values[key] = parse_complex(v);
      }
      const double tol = tol_text.empty() ? entry->default_tol : parse_complex(tol_text).real();
      const IdentityReport r = run_check(*entry, values, tol, settings);
      out << dump(to_json(r));
      return r.passed ? kExitOk : kExitFailed;
    }
    // suite
    std::ifstream in(spec_path, std::ios::binary);
    if (!in) {
      err << "qaw: cannot read '" << spec_path << "'\n";
      return kExitIo;
    }
    Json doc;
    try {
      doc = Json::parse(in);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("suite spec is not valid JSON: ") + e.what());
    }
    const SuiteSpec spec = parse_suite_spec(doc);
    g_interrupted = false;
    const auto previous = std::signal(SIGINT, on_sigint);
    const std::vector<IdentityReport> reports = run_suite(spec, settings, [] { return g_interrupted.load(); });
    std::signal(SIGINT, previous);
    const bool interrupted = g_interrupted.load();
    const std::string text = dump(report_document(reports, settings, spec.seed, interrupted));
    const std::string target = out_path.empty() ? spec.output : out_path;
    if (target.empty())
      out << text;
    else if (const int rc = write_file(target, text, err); rc != kExitOk)
      return rc;
    const Summary s = summarize(reports);
    err << "qaw: " << s.total << " checks, " << s.passed << " passed, " << s.failed << " failed, " << s.skipped
        << " skipped, " << s.diverged << " diverged" << (interrupted ? " (interrupted)" : "") << "\n";
    if (s.failed > 0) return kExitFailed;
    if (s.diverged > 0 || interrupted) return kExitNumerical;
    return kExitOk;
  } catch (const UsageError& e) {
    err << "qaw: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "qaw: " << e.what() << "\n";
    return *eval ? kExitNumerical : kExitDomain;
  } catch (const NumericalError& e) {
    err << "qaw: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "qaw: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace qaw::cli
