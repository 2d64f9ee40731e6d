#include <doctest.h>

#include <numbers>
#include <random>

#include "oracles.hpp"
#include "qaw/errors.hpp"
#include "qaw/identities.hpp"
#include "qaw/qops.hpp"
#include "support.hpp"

using namespace qaw;

namespace {

GeneratingParams example_generating() { return {0.2, 0.3, 0.4, 0.25, 0.15, 0.1, 0.2, 0.6, 1.5, 0.5}; }

void same_sides(const IdentityReport& x, const IdentityReport& y, double tol) {
  CHECK(rel_err(x.lhs, y.lhs) < tol);
  CHECK(rel_err(x.rhs, y.rhs) < tol);
}

}  // namespace

TEST_CASE("report scoring") {
  IdentityReport r;
  r.lhs = 1.0;
  r.rhs = 1.0 + 1e-9;
  r.tolerance = 1e-8;
  score(r);
  CHECK(r.passed);
  CHECK(r.status == CheckStatus::passed);
  CHECK(r.rel_err == doctest::Approx(1e-9).epsilon(1e-6));
  r.tolerance = 1e-10;
  score(r);
  CHECK_FALSE(r.passed);
  CHECK(r.status == CheckStatus::failed);
  r.lhs = r.rhs = 0.0;
  score(r);
  CHECK(r.passed);
  CHECK(r.rel_err == 0.0);
}

TEST_CASE("three-term lemma") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int i = 0; i < 20; ++i) {
    GeneratingParams p{0.3 + 0.5 * std::abs(u(rng)), Complex(u(rng), u(rng)), u(rng), u(rng), u(rng),
                       u(rng), u(rng), 0.95, 1.0, 0.3 + 0.4 * std::abs(u(rng))};
    const IdentityReport r = check_lemma_three_term(p);
    CHECK(r.criterion == Criterion::absolute);
    CHECK(r.abs_err < 1e-12);
    CHECK(r.passed);
  }
  GeneratingParams p = example_generating();
  p.u = p.s;
  const IdentityReport su = check_lemma_three_term(p);
  CHECK(su.lhs == Complex(0.0));
  CHECK(std::abs(su.rhs) < 1e-15);
  CHECK(su.passed);

  p = example_generating();
  p.u = 0.0;
  const IdentityReport u0 = check_lemma_three_term(p);
  const Complex a = p.a;
  const Complex expected = p.s * q_pochhammer_multi({a * p.b * p.z, a * p.t}, PochOrder::infinite(), QContext(0.5)) /
                           q_pochhammer_multi({a * p.s, a * p.z}, PochOrder::infinite(), QContext(0.5));
  CHECK(rel_err(u0.lhs, expected) < 1e-15);
  CHECK(rel_err(u0.rhs, expected) < 1e-15);

  p.s = 5.0 / p.a;  // |as| >= 1
  CHECK_THROWS_AS(check_lemma_three_term(p), DomainError);
}

TEST_CASE("fractional generating function") {
  const IdentityReport r = check_theorem_fractional_generating(example_generating());
  CHECK(r.passed);
  CHECK(r.rel_err < 1e-8);
  CHECK(rel_err(r.lhs, oracle::fractional_generating) < 1e-13);
  CHECK(rel_err(r.rhs, oracle::fractional_generating) < 1e-12);
  CHECK(r.lhs_diag.route == "fractional_q_integral");
  CHECK(r.rhs_diag.k_terms > 0);

  SUBCASE("collapsed case") {
    GeneratingParams p{0.2, 0, 0, 0, 0, 0, 0, 0.6, 1.7, 0.5};
    const IdentityReport c = check_theorem_fractional_generating(p);
    CHECK(rel_err(c.lhs, oracle::frac_const_1_7) < 1e-13);
    CHECK(rel_err(c.rhs, oracle::frac_const_1_7) < 1e-13);
    p.mu = 1.0;
    const IdentityReport one = check_theorem_fractional_generating(p);
    CHECK(rel_err(one.lhs, 0.4) < 1e-15);
    CHECK(rel_err(one.rhs, 0.4) < 1e-15);
  }
  SUBCASE("u = 0 reduces to the r = u = 0 case") {
    GeneratingParams p = example_generating();
    p.u = 0.0;
    const IdentityReport full = check_theorem_fractional_generating(p);
    const IdentityReport short_form = check_generating_3phi2(p);
    same_sides(full, short_form, 1e-12);
    CHECK(rel_err(short_form.lhs, oracle::generating_3phi2) < 1e-13);
    CHECK(short_form.passed);
  }
  SUBCASE("mu = 1 is the plain Jackson integral") {
    GeneratingParams p = example_generating();
    p.mu = 1.0;
    const IdentityReport short_form = check_generating_3phi2(p);
    const QContext ctx(0.5);
    auto f = [&](double y) {
      return q_pochhammer_multi({p.b * y * p.z, y * p.t}, PochOrder::infinite(), ctx) /
             q_pochhammer_multi({y * p.s, y * p.z}, PochOrder::infinite(), ctx);
    };
    CHECK(rel_err(short_form.lhs, jackson_q_integral(f, p.a, p.x, ctx).value) < 1e-13);
  }
  SUBCASE("domain violations") {
    GeneratingParams p = example_generating();
    p.x = 0.1;
    CHECK_THROWS_AS(check_theorem_fractional_generating(p), DomainError);
    p = example_generating();
    p.t = 6.0;
    CHECK_THROWS_AS(check_theorem_fractional_generating(p), DomainError);
    p = example_generating();
    p.mu = 0.0;
    CHECK_THROWS_AS(check_generating_3phi2(p), DomainError);
  }
  SUBCASE("outer series that keeps growing is reported, not truncated") {
    GeneratingParams p{0.1, -3.5, 0.0, -3.2, 3.7, 0.0, -0.6, 0.8, 1.0, 0.6};
    CHECK_THROWS_AS(check_generating_3phi2(p), KSumDivergence);
  }
}

TEST_CASE("Cauchy operator identity") {
  const IdentityReport r = check_cauchy_reciprocal({0.3, 0.2, 0.4, 0.5, 0.5, 40});
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, oracle::cauchy_closed) < 1e-15);
  CHECK(r.rel_err < 1e-14);
  CHECK_THROWS_AS(check_cauchy_reciprocal({0.3, 0.2, 0.0, 0.5, 0.5, 40}), DomainError);
  CHECK_THROWS_AS(check_cauchy_reciprocal({0.3, 3.0, 0.4, 0.5, 0.5, 40}), DomainError);
}

TEST_CASE("Askey-Wilson integral") {
  const IdentityReport r = check_askey_wilson({0.3, 0.2, 0.1, 0.4, 0.6, 1.0, 0.5}, 1e-8);
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, oracle::askey_wilson) < 1e-14);
  CHECK(rel_err(r.lhs, oracle::askey_wilson) < 1e-12);
  const IdentityReport zero = check_askey_wilson({0, 0, 0, 0, 0.6, 1.0, 0.5});
  CHECK(rel_err(zero.lhs, oracle::two_pi_over_qq) < 1e-10);
  CHECK(rel_err(zero.rhs, oracle::two_pi_over_qq) < 1e-14);
  const IdentityReport swapped = check_askey_wilson({0.2, 0.3, 0.1, 0.4, 0.6, 1.0, 0.5});
  same_sides(r, swapped, 1e-12);
  CHECK_THROWS_AS(check_askey_wilson({1.2, 0.2, 0.1, 0.4, 0.6, 1.0, 0.5}), DomainError);
}

TEST_CASE("fractional Askey-Wilson integral") {
  const AWParams p{0.2, 0.3, 0.1, 0.15, 0.6, 1.5, 0.5};
  const IdentityReport r = check_fractional_aw(p);
  CHECK(r.passed);
  CHECK(r.rel_err < 1e-6);
  CHECK(rel_err(r.rhs, oracle::fractional_aw) < 1e-13);
  CHECK(std::abs(r.lhs.imag()) < 10 * r.lhs_diag.est_error);

  SUBCASE("d = 0 matches the three-parameter version") {
    AWParams d0 = p;
    d0.d = 0.0;
    same_sides(check_fractional_aw(d0), check_fractional_aw_corollary(d0), 1e-12);
  }
  SUBCASE("operator route: theta integral inside the fractional integral") {
    const QContext ctx(0.5);
    const Complex a = p.a, b = p.b, c = p.c, d = p.d;
    const PochOrder inf = PochOrder::infinite();
    auto j = [&](double y) {
      auto w = [&](double th) {
        return h_cos(2 * th, {Complex(1.0)}, ctx) / h_cos(th, {Complex(y), b, c, d}, ctx);
      };
      return integrate_theta(w, QuadratureConfig{}).value * q_pochhammer_multi({y * b, y * c, y * d}, inf, ctx) /
             q_pochhammer(y * b * c * d, inf, ctx);
    };
    const Complex op = fractional_q_integral(j, p.x, p.a.real(), FractionalOrder(p.mu), ctx).value;
    const Complex scale = q_pochhammer(a * b * c * d, inf, ctx) / q_pochhammer_multi({a * b, a * c, a * d}, inf, ctx) /
                          std::pow(1 - ctx.q, p.mu);
    CHECK(rel_err(r.lhs, op * scale) < 1e-8);
  }
  SUBCASE("fractional variants need a real lower limit inside (0, x)") {
    AWParams bad = p;
    bad.a = Complex(0.2, 0.1);
    CHECK_THROWS_AS(check_fractional_aw(bad), DomainError);
    bad = p;
    bad.x = 0.1;
    CHECK_THROWS_AS(check_fractional_aw_corollary(bad), DomainError);
  }
}

TEST_CASE("reversal Askey-Wilson integral") {
  const IdentityReport r = check_reversal_aw({0.2, 0.1, 0.15, 0.1, 0.6, 1.0, 0.5});
  CHECK(r.passed);
  CHECK(r.rel_err < 1e-6);
  CHECK(rel_err(r.rhs, oracle::reversal) < 1e-14);
  CHECK(std::abs(r.lhs.imag()) < 10 * r.lhs_diag.est_error);
  const IdentityReport zero = check_reversal_aw({0, 0, 0, 0, 0.6, 1.0, 0.5});
  CHECK(rel_err(zero.lhs, oracle::qq_ln2) < 1e-8);

  SUBCASE("a wider window changes the value by less than the error estimate") {
    CheckSettings wide;
    wide.quad.window_tail_tol = 1e-24;
    const IdentityReport w = check_reversal_aw({0.2, 0.1, 0.15, 0.1, 0.6, 1.0, 0.5}, kTolLine, wide);
    CHECK(w.lhs_diag.window > r.lhs_diag.window);
    CHECK(std::abs(w.lhs - r.lhs) <= r.lhs_diag.est_error);
  }
  CHECK_THROWS_AS(check_reversal_aw({4, 4, 4, 4, 0.6, 1.0, 0.5}), DomainError);
}

TEST_CASE("fractional reversal integral") {
  const ReversalParams p{0.2, 0.1, 0.1, 0.05, 0.6, 1.5, 0.5};
  const IdentityReport r = check_fractional_reversal_aw(p);
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, oracle::fractional_reversal) < 1e-13);
  CHECK(std::abs(r.lhs.imag()) < 10 * r.lhs_diag.est_error);
  ReversalParams d0 = p;
  d0.d = 0.0;
  same_sides(check_fractional_reversal_aw(d0), check_fractional_reversal_corollary(d0), 1e-12);
}

TEST_CASE("Atakishiyev integral") {
  const IdentityReport zero = check_atakishiyev({0, 0, 0, 0, 0.6, 1.0, 1.0});
  CHECK(rel_err(zero.lhs, oracle::sqrt_pi_e_quarter) < 1e-10);
  CHECK(rel_err(zero.rhs, oracle::sqrt_pi_e_quarter) < 1e-14);
  const IdentityReport r = check_atakishiyev({0.1, 0.05, 0.08, 0.02, 0.6, 1.0, 1.0});
  CHECK(r.rel_err < 1e-6);
  CHECK(rel_err(r.rhs, oracle::atakishiyev) < 1e-14);
  same_sides(r, check_atakishiyev({0.05, 0.1, 0.08, 0.02, 0.6, 1.0, 1.0}), 1e-12);
  AtakishiyevParams bad{0.1, 0.05, 0.08, 0.02, 0.6, 1.0, 0.0};
  CHECK_THROWS_AS(check_atakishiyev(bad), DomainError);
  CHECK(AtakishiyevParams{0, 0, 0, 0, 0.6, 1.0, 1.0}.q() == std::exp(-2.0));
}

TEST_CASE("fractional Atakishiyev integral") {
  const AtakishiyevParams p{0.15, 0.05, 0.05, 0.02, 0.6, 1.5, 1.0};
  const IdentityReport r = check_fractional_atakishiyev(p);
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, oracle::fractional_atakishiyev) < 1e-13);
  CHECK(std::abs(r.lhs.imag()) < 10 * r.lhs_diag.est_error);
  AtakishiyevParams d0 = p;
  d0.d = 0.0;
  same_sides(check_fractional_atakishiyev(d0), check_fractional_atakishiyev_corollary(d0), 1e-12);
}

TEST_CASE("residuals measure the identity, not the truncation") {
  CheckSettings tight;
  tight.ctx.eps_term = 1e-16;
  tight.ctx.eps_factor = 1e-18;
  tight.quad.rel_tol = 1e-11;
  const std::vector<std::pair<IdentityReport, IdentityReport>> pairs{
      {check_theorem_fractional_generating(example_generating()),
       check_theorem_fractional_generating(example_generating(), kTolGenerating, tight)},
      {check_fractional_aw({0.2, 0.3, 0.1, 0.15, 0.6, 1.5, 0.5}),
       check_fractional_aw({0.2, 0.3, 0.1, 0.15, 0.6, 1.5, 0.5}, kTolAskeyWilson, tight)},
      {check_fractional_reversal_aw({0.2, 0.1, 0.1, 0.05, 0.6, 1.5, 0.5}),
       check_fractional_reversal_aw({0.2, 0.1, 0.1, 0.05, 0.6, 1.5, 0.5}, kTolLine, tight)}};
  for (const auto& [loose, strict] : pairs) CHECK(std::abs(loose.rel_err - strict.rel_err) < 1e-10);
}

TEST_CASE("tolerance only affects the verdict") {
  const AWParams p{0.3, 0.2, 0.1, 0.4, 0.6, 1.0, 0.5};
  const IdentityReport loose = check_askey_wilson(p, 1e-6);
  const IdentityReport strict = check_askey_wilson(p, 1e-30);
  CHECK(loose.lhs == strict.lhs);
  CHECK(loose.rhs == strict.rhs);
  CHECK(loose.passed);
  CHECK_FALSE(strict.passed);
  CHECK_THROWS_AS(check_askey_wilson(p, 0.0), DomainError);
}

TEST_CASE("registry") {
  CHECK(check_registry().size() == 13);
  CHECK(find_check("askey-wilson") != nullptr);
  CHECK(find_check("nope") == nullptr);
  CHECK(registry_names().find("fractional-atakishiyev-corollary") != std::string::npos);
  const CheckEntry& aw = *find_check("askey-wilson");
  const IdentityReport r = run_check(aw, {{"a", 0.3}, {"b", 0.2}, {"c", 0.1}, {"d", 0.4}}, 1e-8);
  CHECK(r.passed);
  CHECK(rel_err(r.rhs, oracle::askey_wilson) < 1e-14);
  CHECK_THROWS_AS(run_check(aw, {{"e", 0.3}}, 1e-8), UsageError);
  CHECK_THROWS_AS(run_check(*find_check("fractional-aw"), {{"b", 0.3}}, 1e-8), UsageError);
  const IdentityReport g = run_check(*find_check("atakishiyev"), {}, kTolLine);
  CHECK(rel_err(g.rhs, oracle::sqrt_pi_e_quarter) < 1e-14);
  CHECK(g.passed);
}

TEST_CASE("suite runner") {
  CHECK(run_suite(SuiteSpec{}).empty());

  SuiteSpec trivial;
  trivial.seed = 1;
  for (const char* name : {"askey-wilson", "reversal-aw", "atakishiyev"}) trivial.checks.push_back({name, {}, {}, 1});
  const auto reports = run_suite(trivial);
  REQUIRE(reports.size() == 3);
  for (const auto& r : reports) CHECK(r.status == CheckStatus::passed);

  SuiteSpec drawn;
  drawn.seed = 42;
  SuiteCheck c{"askey-wilson", {}, 1e-8, 4};
  c.params["a"] = {ParamSource::Kind::range, {}, -0.6, 0.6, {}};
  c.params["q"] = {ParamSource::Kind::choice, {}, 0, 0, {0.3, 0.5, 0.7}};
  c.params["b"] = {ParamSource::Kind::fixed, 0.2, 0, 0, {}};
  drawn.checks.push_back(c);
  SuiteCheck invalid{"askey-wilson", {}, {}, 1};
  invalid.params["a"] = {ParamSource::Kind::fixed, 1.5, 0, 0, {}};
  drawn.checks.push_back(invalid);
  const auto first = run_suite(drawn);
  const auto second = run_suite(drawn);
  REQUIRE(first.size() == 5);
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (first[i].status == CheckStatus::passed) CHECK(first[i].lhs == second[i].lhs);
    CHECK(first[i].status == second[i].status);
    CHECK(first[i].params.size() == second[i].params.size());
  }
  for (int i = 0; i < 4; ++i) CHECK(first[i].status == CheckStatus::passed);
  CHECK(first[4].status == CheckStatus::skipped);
  CHECK(first[4].message.find("max(|a|") != std::string::npos);

  SuiteSpec diverging;
  SuiteCheck k{"generating-3phi2", {}, {}, 1};
  for (auto [n, v] : std::vector<std::pair<const char*, double>>{
           {"a", 0.1}, {"b", -3.5}, {"s", -3.2}, {"t", 3.7}, {"z", -0.6}, {"x", 0.8}, {"q", 0.6}})
    k.params[n] = {ParamSource::Kind::fixed, v, 0, 0, {}};
  diverging.checks.push_back(k);
  CHECK(run_suite(diverging).front().status == CheckStatus::diverged);

  SuiteSpec unknown;
  unknown.checks.push_back({"no-such-identity", {}, {}, 1});
  CHECK_THROWS_AS(run_suite(unknown), UsageError);

  int calls = 0;
  const auto partial = run_suite(trivial, {}, [&] { return ++calls > 1; });
  CHECK(partial.size() == 1);
}
