#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/identities.hpp"

namespace qaw {

namespace {

Complex get(const ParamMap& m, std::string_view name) { return m.find(name)->second; }

double get_real(const ParamMap& m, std::string_view name) {
  const Complex v = get(m, name);
  if (v.imag() != 0.0) throw DomainError(std::string(name) + " must be real");
  return v.real();
}

GeneratingParams generating(const ParamMap& m) {
  GeneratingParams p;
  p.a = get_real(m, "a");
  p.b = get(m, "b");
  p.r = get(m, "r");
  p.s = get(m, "s");
  p.t = get(m, "t");
  p.u = get(m, "u");
  p.z = get(m, "z");
  p.x = get_real(m, "x");
  p.mu = get_real(m, "mu");
  p.q = get_real(m, "q");
  return p;
}

template <class P>
P four(const ParamMap& m, bool fractional) {
  P p;
  p.a = get(m, "a");
  p.b = get(m, "b");
  p.c = get(m, "c");
  p.d = get(m, "d");
  if (fractional) {
    p.x = get_real(m, "x");
    p.mu = get_real(m, "mu");
  }
  if constexpr (requires { p.q = 0.5; })
    p.q = get_real(m, "q");
  else
    p.alpha_g = get_real(m, "alpha_g");
  return p;
}

CauchyParams cauchy(const ParamMap& m) {
  CauchyParams p;
  p.a = get(m, "a");
  p.b = get(m, "b");
  p.c = get(m, "c");
  p.t = get(m, "t");
  p.q = get_real(m, "q");
  const double n = get_real(m, "n_max");
  if (n != std::floor(n) || n < 0 || n > 1000) throw DomainError("n_max must be an integer in [0, 1000]");
  p.n_max = static_cast<int>(n);
  return p;
}

const ParamDefault kQ{"q", false, 0.5};
const ParamDefault kX{"x", true, 0.0};
const ParamDefault kMu{"mu", false, 1.0};
ParamDefault zero(std::string n) { return {std::move(n), false, 0.0}; }
ParamDefault required(std::string n) { return {std::move(n), true, 0.0}; }

std::vector<ParamDefault> generating_params() {
  return {required("a"), zero("b"), zero("r"), zero("s"), zero("t"), zero("u"), zero("z"), kX, kMu, kQ};
}

std::vector<ParamDefault> four_params(bool fractional, ParamDefault base) {
  std::vector<ParamDefault> v{fractional ? required("a") : zero("a"), zero("b"), zero("c"), zero("d")};
  if (fractional) {
    v.push_back(kX);
    v.push_back(kMu);
  }
  v.push_back(std::move(base));
  return v;
}

const std::vector<CheckEntry>& entries() {
  static const std::vector<CheckEntry> v = [] {
    const ParamDefault alpha{"alpha_g", false, 1.0};
    std::vector<CheckEntry> e;
    e.push_back({"lemma-three-term", "three-term product identity behind the generating function", kTolLemma,
                 {required("a"), zero("b"), zero("r"), zero("s"), zero("t"), zero("u"), zero("z"), {"x", false, 0.6},
                  kMu, kQ},
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_lemma_three_term(generating(m), tol, s);
                 }});
    e.push_back({"fractional-generating", "fractional q-integral generating function with a 4phi3 k-sum",
                 kTolGenerating, generating_params(), [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_theorem_fractional_generating(generating(m), tol, s);
                 }});
    e.push_back({"generating-3phi2", "r = u = 0 generating function with a 3phi2 k-sum", kTolGenerating,
                 {required("a"), zero("b"), zero("s"), zero("t"), zero("z"), kX, kMu, kQ},
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   ParamMap full(m);
                   full.emplace("r", 0.0);
                   full.emplace("u", 0.0);
                   return check_generating_3phi2(generating(full), tol, s);
                 }});
    e.push_back({"cauchy-reciprocal", "Cauchy operator on 1/(ct;q)_inf", kTolCauchy,
                 {zero("a"), zero("b"), required("c"), zero("t"), kQ, {"n_max", false, 40.0}},
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_cauchy_reciprocal(cauchy(m), tol, s);
                 }});
    e.push_back({"askey-wilson", "Askey-Wilson integral", kTolAskeyWilson, four_params(false, kQ),
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_askey_wilson(four<AWParams>(m, false), tol, s);
                 }});
    e.push_back({"fractional-aw", "fractional Askey-Wilson integral", kTolAskeyWilson, four_params(true, kQ),
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_aw(four<AWParams>(m, true), tol, s);
                 }});
    e.push_back({"fractional-aw-corollary", "three-parameter fractional Askey-Wilson integral", kTolAskeyWilson,
                 four_params(true, kQ), [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_aw_corollary(four<AWParams>(m, true), tol, s);
                 }});
    e.push_back({"reversal-aw", "reversal Askey-Wilson integral", kTolLine, four_params(false, kQ),
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_reversal_aw(four<ReversalParams>(m, false), tol, s);
                 }});
    e.push_back({"fractional-reversal-aw", "fractional reversal Askey-Wilson integral", kTolLine,
                 four_params(true, kQ), [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_reversal_aw(four<ReversalParams>(m, true), tol, s);
                 }});
    e.push_back({"fractional-reversal-corollary", "three-parameter fractional reversal integral", kTolLine,
                 four_params(true, kQ), [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_reversal_corollary(four<ReversalParams>(m, true), tol, s);
                 }});
    e.push_back({"atakishiyev", "Atakishiyev integral, q = exp(-2 alpha_g^2)", kTolLine, four_params(false, alpha),
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_atakishiyev(four<AtakishiyevParams>(m, false), tol, s);
                 }});
    e.push_back({"fractional-atakishiyev", "fractional Atakishiyev integral", kTolLine, four_params(true, alpha),
                 [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_atakishiyev(four<AtakishiyevParams>(m, true), tol, s);
                 }});
    e.push_back({"fractional-atakishiyev-corollary", "three-parameter fractional Atakishiyev integral", kTolLine,
                 four_params(true, alpha), [](const ParamMap& m, double tol, const CheckSettings& s) {
                   return check_fractional_atakishiyev_corollary(four<AtakishiyevParams>(m, true), tol, s);
                 }});
    return e;
  }();
  return v;
}

}  // namespace

std::span<const CheckEntry> check_registry() { return entries(); }

const CheckEntry* find_check(std::string_view name) {
  for (const CheckEntry& e : entries())
    if (e.name == name) return &e;
  return nullptr;
}

std::string registry_names() {
  std::string out;
  for (const CheckEntry& e : entries()) {
    if (!out.empty()) out += ", ";
    out += e.name;
  }
  return out;
}

IdentityReport run_check(const CheckEntry& entry, const ParamMap& values, double tol,
                         const CheckSettings& settings) {
  for (const auto& [name, v] : values) {
    const bool known = std::any_of(entry.params.begin(), entry.params.end(),
                                   [&](const ParamDefault& d) { return d.name == name; });
    if (!known) throw UsageError("identity '" + entry.name + "' has no parameter '" + name + "'");
  }
  ParamMap full;
  for (const ParamDefault& d : entry.params) {
    const auto it = values.find(d.name);
    if (it != values.end())
      full.emplace(d.name, it->second);
    else if (d.required)
      throw UsageError("identity '" + entry.name + "' needs parameter '" + d.name + "'");
    else
      full.emplace(d.name, d.fallback);
  }
  return entry.run(full, tol, settings);
}

}  // namespace qaw
