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

Complex aw_weight(double theta, std::initializer_list<Complex> params, const QContext& ctx) {
  return h_cos(2.0 * theta, {Complex(1.0)}, ctx) / h_cos(theta, params, ctx);
}

Complex inf_prod(std::initializer_list<Complex> params, const QContext& ctx) {
  return q_pochhammer_multi(params, PochOrder::infinite(), ctx);
}

// theta-integral of the weight times the k-sum with the given lists; the
// numerator list always starts with a e^{i theta}, a e^{-i theta}
QuadratureResult fractional_theta_integral(const AWParams& p, std::initializer_list<Complex> weight_params,
                                           std::vector<Complex> extra_numer, std::vector<Complex> denom,
                                           const CheckSettings& settings, const QContext& ctx, int& k_terms) {
  const double a = p.a.real();
  detail::FractionalKSum ksum(p.x, a, p.mu, ctx);
  std::vector<Complex> numer(2);
  numer.insert(numer.end(), extra_numer.begin(), extra_numer.end());
  k_terms = 0;
  auto f = [&](double theta) {
    numer[0] = std::polar(a, theta);
    numer[1] = std::polar(a, -theta);
    const auto s = ksum.sum(numer, denom);
    k_terms = std::max(k_terms, s.k_terms);
    return aw_weight(theta, weight_params, ctx) * s.value;
  };
  return integrate_theta(f, settings.quad);
}

}  // namespace

IdentityReport check_askey_wilson(const AWParams& p, double tol, const CheckSettings& settings) {
  p.validate();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("askey-wilson", p.to_params(false), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    const QuadratureResult lhs =
        integrate_theta([&](double th) { return aw_weight(th, {a, b, c, d}, ctx); }, settings.quad);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_theta", lhs);
    r.rhs = 2.0 * std::numbers::pi * inf_prod({a * b * c * d}, ctx) /
            inf_prod({ctx.q, a * b, a * c, a * d, b * c, b * d, c * d}, ctx);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_aw(const AWParams& p, double tol, const CheckSettings& settings) {
  p.validate_fractional();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("fractional-aw", p.to_params(true), tol, Criterion::relative, [&](IdentityReport& r) {
    const auto [a, b, c, d] = std::tuple(p.a, p.b, p.c, p.d);
    int k_terms = 0;
    const QuadratureResult lhs = fractional_theta_integral(p, {a, b, c, d}, {a * b * c * d},
                                                           {a * b, a * c, a * d}, settings, ctx, k_terms);
    r.lhs = lhs.value;
    r.lhs_diag = quad_diag("integrate_theta of weight x k-sum", lhs, k_terms);
    r.rhs = 2.0 * std::numbers::pi * inf_prod({a * b * c * d}, ctx) /
            inf_prod({ctx.q, a * b, a * c, a * d, b * c, b * d, c * d}, ctx) * detail::fractional_weight(p.x, a.real(), p.mu, ctx);
    r.rhs_diag = closed_diag("closed product");
  });
}

IdentityReport check_fractional_aw_corollary(const AWParams& p, double tol, const CheckSettings& settings) {
  AWParams g = p;
  g.d = 0.0;
  g.validate_fractional();
  const QContext ctx = settings.ctx.with_base(p.q);
  ParamList params = g.to_params(true);
  std::erase_if(params, [](const NamedValue& v) { return v.name == "d"; });
  return timed_check("fractional-aw-corollary", std::move(params), tol, Criterion::relative,
                     [&](IdentityReport& r) {
                       const auto [a, b, c] = std::tuple(g.a, g.b, g.c);
                       int k_terms = 0;
                       const QuadratureResult lhs =
                           fractional_theta_integral(g, {a, b, c}, {}, {a * b, a * c}, settings, ctx, k_terms);
                       r.lhs = lhs.value;
                       r.lhs_diag = quad_diag("integrate_theta of weight x k-sum", lhs, k_terms);
                       r.rhs = 2.0 * std::numbers::pi / inf_prod({ctx.q, a * b, a * c, b * c}, ctx) * detail::fractional_weight(g.x, a.real(), g.mu, ctx);
                       r.rhs_diag = closed_diag("closed product");
                     });
}

}  // namespace qaw
