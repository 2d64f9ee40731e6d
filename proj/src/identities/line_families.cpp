#include <cmath>
#include <numbers>

#include "identities/common.hpp"
#include "identities/ksum.hpp"
#include "qaw/errors.hpp"

namespace qaw {

namespace {

using detail::closed_diag;
using detail::quad_diag;
using detail::timed_check;

constexpr Complex kI(0.0, 1.0);

Complex inf_prod(std::initializer_list<Complex> params, const QContext& ctx) {
  return q_pochhammer_multi(params, PochOrder::infinite(), ctx);
}

// h(i sinh t; qa, qb, ...) / h(cosh 2t; -q)
LogValue reversal_weight(double t, std::initializer_list<Complex> params, const QContext& ctx) {
  LogValue w;
  for (const Complex& p : params) w *= h_sinh_log(t, ctx.q * p, ctx);
  return w / h_cosh_log(2.0 * t, Complex(-ctx.q), ctx);
}

double log_cosh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// h(i sinh alpha t; a, b, ...) e^{-t^2} cosh(alpha t)
LogValue gaussian_weight(double t, double alpha, std::initializer_list<Complex> params, const QContext& ctx) {
  LogValue w{-t * t + log_cosh(alpha * t), 0.0};
  for (const Complex& p : params) w *= h_sinh_log(alpha * t, p, ctx);
  return w;
}

// Line integral of weight(t) * k-sum(numer, denom(t)); `denom_head` fills the
// two t-dependent denominator slots.
template <class Weight, class Head>
QuadratureResult fractional_line_integral(double x, double a, double mu, const Weight& weight, const Head& denom_head,
                                          std::vector<Complex> numer, std::vector<Complex> extra_denom,
                                          const CheckSettings& settings, const QContext& ctx, int& k_terms) {
  detail::FractionalKSum ksum(x, a, mu, ctx);
  std::vector<Complex> denom(2);
  denom.insert(denom.end(), extra_denom.begin(), extra_denom.end());
  k_terms = 0;
  auto f = [&](double t) {
    const auto [d0, d1] = denom_head(t);
    denom[0] = d0;
    denom[1] = d1;
    const auto s = ksum.sum(numer, denom);
    k_terms = std::max(k_terms, s.k_terms);
    return weight(t) * LogValue::from(s.value);
  };
  return integrate_line_even_window(LineIntegrand(f), settings.quad);
}

double real_a(Complex a) { return a.real(); }

}  // namespace

IdentityReport check_reversal_aw(const ReversalParams& p, double tol, const CheckSettings& settings) {
  p.validate();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("reversal-aw", p.to_params(false), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    const QuadratureResult lhs = integrate_line_even_window(
        LineIntegrand([&](double t) { return reversal_weight(t, {a, b, c, d}, ctx); }), settings.quad);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_line_even_window", lhs);
    const double q = ctx.q;
    r.rhs = inf_prod({q, q * a * b, q * a * c, q * a * d, q * b * c, q * b * d, q * c * d}, ctx) /
            inf_prod({q * a * b * c * d}, ctx) * std::log(1.0 / q);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_reversal_aw(const ReversalParams& p, double tol, const CheckSettings& settings) {
  p.validate_fractional();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("fractional-reversal-aw", p.to_params(true), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    const double q = ctx.q;
    int k_terms = 0;
    const QuadratureResult lhs = fractional_line_integral(
        p.x, real_a(a), p.mu, [&](double t) { return reversal_weight(t, {a, b, c, d}, ctx); },
        [&](double t) { return std::pair(kI * a * q * std::exp(t), -kI * a * q * std::exp(-t)); },
        {q * a * b, q * a * c, q * a * d}, {q * a * b * c * d}, settings, ctx, k_terms);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_line_even_window of weight x k-sum", lhs, k_terms);
    r.rhs = inf_prod({q, q * a * b, q * a * c, q * a * d, q * b * c, q * b * d, q * c * d}, ctx) /
            inf_prod({q * a * b * c * d}, ctx) * detail::fractional_weight(p.x, real_a(a), p.mu, ctx) *
            std::log(1.0 / q);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_reversal_corollary(const ReversalParams& p, double tol,
                                                   const CheckSettings& settings) {
  ReversalParams g = p;
  g.d = 0.0;
  g.validate_fractional();
  const QContext ctx = settings.ctx.with_base(p.q);
  ParamList params = g.to_params(true);
  std::erase_if(params, [](const NamedValue& v) { return v.name == "d"; });
  return timed_check("fractional-reversal-corollary", std::move(params), tol, Criterion::relative,
                     [&](IdentityReport& r) {
                       const auto [a, b, c] = std::tuple(g.a, g.b, g.c);
                       const double q = ctx.q;
                       int k_terms = 0;
                       const QuadratureResult lhs = fractional_line_integral(
                           g.x, real_a(a), g.mu, [&](double t) { return reversal_weight(t, {a, b, c}, ctx); },
                           [&](double t) { return std::pair(kI * a * q * std::exp(t), -kI * a * q * std::exp(-t)); },
                           {q * a * b, q * a * c}, {}, settings, ctx, k_terms);
                       r.lhs = lhs.value;
                       r.lhs_diag = quad_diag("integrate_line_even_window of weight x k-sum", lhs, k_terms);
                       r.rhs = inf_prod({q, q * a * b, q * a * c, q * b * c}, ctx) *
                               detail::fractional_weight(g.x, real_a(a), g.mu, ctx) * std::log(1.0 / q);
                       r.rhs_diag = closed_diag("closed product");
                     });
}

IdentityReport check_atakishiyev(const AtakishiyevParams& p, double tol, const CheckSettings& settings) {
  p.validate();
  const QContext ctx = settings.ctx.with_base(p.q());
  return timed_check("atakishiyev", p.to_params(false), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    const double q = ctx.q;
    const QuadratureResult lhs = integrate_line_even_window(
        LineIntegrand([&](double t) { return gaussian_weight(t, p.alpha_g, {a, b, c, d}, ctx); }), settings.quad);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_line_even_window", lhs);
    r.rhs = std::sqrt(std::numbers::pi) * std::pow(q, -0.125) *
            inf_prod({a * b / q, a * c / q, a * d / q, b * c / q, b * d / q, c * d / q}, ctx) /
            inf_prod({a * b * c * d / (q * q * q)}, ctx);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_atakishiyev(const AtakishiyevParams& p, double tol, const CheckSettings& settings) {
  p.validate_fractional();
  const QContext ctx = settings.ctx.with_base(p.q());
  return timed_check("fractional-atakishiyev", p.to_params(true), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    const double q = ctx.q;
    const double alpha = p.alpha_g;
    int k_terms = 0;
    const QuadratureResult lhs = fractional_line_integral(
        p.x, real_a(a), p.mu, [&](double t) { return gaussian_weight(t, alpha, {a, b, c, d}, ctx); },
        [&](double t) { return std::pair(kI * a * std::exp(alpha * t), -kI * a * std::exp(-alpha * t)); },
        {a * b / q, a * c / q, a * d / q}, {a * b * c * d / (q * q * q)}, settings, ctx, k_terms);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_line_even_window of weight x k-sum", lhs, k_terms);
    r.rhs = std::sqrt(std::numbers::pi) * std::pow(q, -0.125) *
            inf_prod({a * b / q, a * c / q, a * d / q, b * c / q, b * d / q, c * d / q}, ctx) /
            inf_prod({a * b * c * d / (q * q * q)}, ctx) * detail::fractional_weight(p.x, real_a(a), p.mu, ctx);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_atakishiyev_corollary(const AtakishiyevParams& p, double tol,
                                                      const CheckSettings& settings) {
  AtakishiyevParams g = p;
  g.d = 0.0;
  g.validate_fractional();
  const QContext ctx = settings.ctx.with_base(g.q());
  ParamList params = g.to_params(true);
  std::erase_if(params, [](const NamedValue& v) { return v.name == "d"; });
  return timed_check("fractional-atakishiyev-corollary", std::move(params), tol, Criterion::relative,
                     [&](IdentityReport& r) {
                       const auto [a, b, c] = std::tuple(g.a, g.b, g.c);
                       const double q = ctx.q;
                       const double alpha = g.alpha_g;
                       int k_terms = 0;
                       const QuadratureResult lhs = fractional_line_integral(
                           g.x, real_a(a), g.mu, [&](double t) { return gaussian_weight(t, alpha, {a, b, c}, ctx); },
                           [&](double t) {
                             return std::pair(kI * a * std::exp(alpha * t), -kI * a * std::exp(-alpha * t));
                           },
                           {a * b / q, a * c / q}, {}, settings, ctx, k_terms);
                       r.lhs = lhs.value;
                       r.lhs_diag = quad_diag("integrate_line_even_window of weight x k-sum", lhs, k_terms);
                       r.rhs = std::sqrt(std::numbers::pi) * std::pow(q, -0.125) *
                               inf_prod({a * b / q, a * c / q, b * c / q}, ctx) *
                               detail::fractional_weight(g.x, real_a(a), g.mu, ctx);
                       r.rhs_diag = closed_diag("closed product");
                     });
}

}  // namespace qaw
