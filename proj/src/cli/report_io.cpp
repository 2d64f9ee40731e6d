#include "qaw/cli/report_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "qaw/errors.hpp"

namespace qaw::cli {

using json = Json;

namespace {

double parse_double(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw UsageError("not a number: '" + std::string(whole) + "'");
  return v;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json param_json(Complex z) {
  if (z.imag() == 0.0) return z.real();
  return complex_json(z);
}

json diag_json(const SideDiagnostics& d) {
  return {{"route", d.route}, {"terms", d.terms},          {"k_terms", d.k_terms},
          {"nodes", d.nodes}, {"window", d.window},        {"est_error", d.est_error},
          {"converged", d.converged}};
}

void dump_into(const json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner + json(it.key()).dump() + ": ";
        dump_into(it.value(), out, indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        dump_into(j[i], out, indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    case json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

ParamSource source_from_json(const json& v, const std::string& name) {
  ParamSource s;
  if (v.is_object() && v.contains("range")) {
    const json& r = v.at("range");
    if (!r.is_array() || r.size() != 2 || !r[0].is_number() || !r[1].is_number())
      throw UsageError("range for '" + name + "' must be [lo, hi]");
    s.kind = ParamSource::Kind::range;
    s.lo = r[0].get<double>();
    s.hi = r[1].get<double>();
    return s;
  }
  if (v.is_object() && v.contains("choice")) {
    const json& c = v.at("choice");
    if (!c.is_array() || c.empty()) throw UsageError("choice for '" + name + "' must be a non-empty list");
    s.kind = ParamSource::Kind::choice;
    for (const json& e : c) s.choices.push_back(complex_from_json(e));
    return s;
  }
  s.fixed = complex_from_json(v);
  return s;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw UsageError("empty number");
  if (t.back() != 'i') return parse_double(t, text);
  const std::string_view body(t.data(), t.size() - 1);
  // split at the last sign that is not part of an exponent
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      const std::string_view im = body.substr(i);
      const double imv = (im == "+" || im == "-") ? (im == "-" ? -1.0 : 1.0) : parse_double(im, text);
      return {parse_double(body.substr(0, i), text), imv};
    }
  }
  if (body.empty() || body == "+") return {0.0, 1.0};
  if (body == "-") return {0.0, -1.0};
  return {0.0, parse_double(body, text)};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_complex(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_complex(Complex z) {
  char buf[80];
  if (z.imag() == 0.0)
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  else
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

Summary summarize(const std::vector<IdentityReport>& reports) {
  Summary s;
  for (const IdentityReport& r : reports) {
    ++s.total;
    switch (r.status) {
      case CheckStatus::passed: ++s.passed; break;
      case CheckStatus::failed: ++s.failed; break;
      case CheckStatus::skipped: ++s.skipped; break;
      case CheckStatus::diverged: ++s.diverged; break;
    }
  }
  return s;
}

json to_json(const IdentityReport& r) {
  json params = json::object();
  for (const NamedValue& p : r.params) params[p.name] = param_json(p.value);
  json j;
  j["identity"] = r.identity_name;
  j["params"] = params;
  j["lhs"] = complex_json(r.lhs);
  j["rhs"] = complex_json(r.rhs);
  j["abs_err"] = r.abs_err;
  j["rel_err"] = r.rel_err;
  j["tolerance"] = r.tolerance;
  j["criterion"] = r.criterion == Criterion::absolute ? "absolute" : "relative";
  j["passed"] = r.passed;
  j["status"] = std::string(to_string(r.status));
  if (!r.message.empty()) j["message"] = r.message;
  j["diagnostics"] = {{"lhs", diag_json(r.lhs_diag)}, {"rhs", diag_json(r.rhs_diag)}};
  j["wall_time"] = r.wall_time.count();
  return j;
}

json report_document(const std::vector<IdentityReport>& reports, const CheckSettings& settings,
                     std::optional<std::uint64_t> seed, bool interrupted) {
  const QContext& c = settings.ctx;
  const QuadratureConfig& q = settings.quad;
  json doc;
  doc["tool"] = "qaw";
  doc["version"] = std::string(kToolVersion);
  doc["context"] = {{"eps_term", c.eps_term},
                    {"eps_factor", c.eps_factor},
                    {"max_terms", c.max_terms},
                    {"max_factors", c.max_factors},
                    {"consecutive_small", c.consecutive_small},
                    {"quadrature",
                     {{"rel_tol", q.rel_tol},
                      {"abs_tol", q.abs_tol},
                      {"max_refinements", q.max_refinements},
                      {"initial_nodes", q.initial_nodes},
                      {"window_growth", q.window_growth},
                      {"window_tail_tol", q.window_tail_tol}}}};
  if (seed) doc["seed"] = *seed;
  if (interrupted) doc["interrupted"] = true;
  json list = json::array();
  for (const IdentityReport& r : reports) list.push_back(to_json(r));
  doc["reports"] = list;
  const Summary s = summarize(reports);
  doc["summary"] = {{"total", s.total},
                    {"passed", s.passed},
                    {"failed", s.failed},
                    {"skipped", s.skipped},
                    {"diverged", s.diverged}};
  return doc;
}

Complex complex_from_json(const json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_complex(v.get<std::string>());
  if (v.is_object() && v.contains("re")) {
    const json& re = v.at("re");
    const json im = v.value("im", json(0.0));
    if (!re.is_number() || !im.is_number()) throw UsageError("re/im must be numbers");
    return {re.get<double>(), im.get<double>()};
  }
  throw UsageError("unsupported parameter value: " + v.dump());
}

SuiteSpec parse_suite_spec(const json& doc) {
  if (!doc.is_object()) throw UsageError("suite spec must be a JSON object");
  if (!doc.contains("seed") || !doc.at("seed").is_number_integer())
    throw UsageError("suite spec needs an integer 'seed'");
  SuiteSpec spec;
  spec.seed = doc.at("seed").get<std::uint64_t>();
  if (doc.contains("output")) spec.output = doc.at("output").get<std::string>();
  const json checks = doc.value("checks", json::array());
  if (!checks.is_array()) throw UsageError("'checks' must be a list");
  for (const json& c : checks) {
    if (!c.is_object() || !c.contains("identity") || !c.at("identity").is_string())
      throw UsageError("every check needs an 'identity' name");
    SuiteCheck sc;
    sc.identity = c.at("identity").get<std::string>();
    if (c.contains("tolerance")) {
      if (!c.at("tolerance").is_number()) throw UsageError("'tolerance' must be a number");
      sc.tolerance = c.at("tolerance").get<double>();
    }
    if (c.contains("draws")) {
      if (!c.at("draws").is_number_integer()) throw UsageError("'draws' must be an integer");
      sc.draws = c.at("draws").get<int>();
    }
    if (sc.draws < 1) throw UsageError("'draws' must be at least 1");
    const json params = c.value("params", json::object());
    if (!params.is_object()) throw UsageError("'params' must be an object");
    for (auto it = params.begin(); it != params.end(); ++it)
      sc.params.emplace(it.key(), source_from_json(it.value(), it.key()));
    spec.checks.push_back(std::move(sc));
  }
  return spec;
}

std::string dump(const json& doc) {
  std::string out;
  dump_into(doc, out, 0);
  out += "\n";
  return out;
}

}  // namespace qaw::cli
