#include <cmath>

#include "identities/common.hpp"
#include "identities/ksum.hpp"
#include "qaw/errors.hpp"
#include "qaw/qops.hpp"

namespace qaw {

namespace {

using detail::closed_diag;
using detail::timed_check;

Complex inf_ratio(std::initializer_list<Complex> numer, std::initializer_list<Complex> denom,
                  const QContext& ctx) {
  const PochOrder inf = PochOrder::infinite();
  return q_pochhammer_multi(numer, inf, ctx) / q_pochhammer_multi(denom, inf, ctx);
}

SideDiagnostics operator_diag(const SeriesResult& s) {
  SideDiagnostics d;
  d.route = "fractional_q_integral";
  d.terms = s.terms;
  d.est_error = s.last_term;
  return d;
}

}  // namespace

IdentityReport check_lemma_three_term(const GeneratingParams& p, double tol, const CheckSettings& settings) {
  const QContext ctx = settings.ctx.with_base(p.q);
  const Complex a = p.a;
  if (std::max({std::abs(a * p.s), std::abs(a * p.z), std::abs(a * p.u)}) >= 1.0)
    throw DomainError("need max(|as|, |az|, |au|) < 1");
  ParamList params = p.to_params();
  std::erase_if(params, [](const NamedValue& v) { return v.name == "x" || v.name == "mu"; });
  return timed_check("lemma-three-term", std::move(params), tol, Criterion::absolute, [&](IdentityReport& r) {
    const Complex abz = a * p.b * p.z, at = a * p.t, aru = a * p.r * p.u;
    const Complex as = a * p.s, az = a * p.z, au = a * p.u;
    const double q = ctx.q;
    r.lhs = (p.s - p.u) * inf_ratio({abz, at, aru}, {as, az, au}, ctx);
    r.rhs = p.u * p.r * inf_ratio({abz, at, aru * q}, {as * q, az, au * q}, ctx) -
            p.u * inf_ratio({abz, at, aru}, {as * q, az, au}, ctx) +
            (p.s - p.u * p.r) * inf_ratio({abz, at, aru * q}, {as, az, au * q}, ctx);
    r.lhs_diag = closed_diag("product");
    r.rhs_diag = closed_diag("shifted products");
  });
}

IdentityReport check_theorem_fractional_generating(const GeneratingParams& p, double tol,
                                                   const CheckSettings& settings) {
  p.validate();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("fractional-generating", p.to_params(), tol, Criterion::relative, [&](IdentityReport& r) {
    const PochOrder inf = PochOrder::infinite();
    auto f = [&](double y) {
      return q_pochhammer_multi({p.b * y * p.z, y * p.t, y * p.r * p.u}, inf, ctx) /
             q_pochhammer_multi({y * p.s, y * p.z, y * p.u}, inf, ctx);
    };
    const SeriesResult lhs = fractional_q_integral(f, p.x, p.a, FractionalOrder(p.mu), ctx);
    r.lhs = lhs.value;
    r.lhs_diag = operator_diag(lhs);

    const Complex a = p.a;
    const Complex numer[] = {a * p.s, a * p.z, a * p.u};
    const Complex denom[] = {a * p.b * p.z, a * p.t, a * p.r * p.u};
    detail::FractionalKSum ksum(p.x, p.a, p.mu, ctx);
    const auto s = ksum.sum(numer, denom);
    r.rhs = std::pow(1.0 - ctx.q, p.mu) *
            inf_ratio({denom[0], denom[1], denom[2]}, {numer[0], numer[1], numer[2]}, ctx) * s.value;
    r.rhs_diag = closed_diag("k-sum", s.k_terms);
  });
}

IdentityReport check_generating_3phi2(const GeneratingParams& p, double tol, const CheckSettings& settings) {
  GeneratingParams g = p;
  g.r = 0.0;
  g.u = 0.0;
  g.validate();
  const QContext ctx = settings.ctx.with_base(p.q);
  ParamList params = g.to_params();
  std::erase_if(params, [](const NamedValue& v) { return v.name == "r" || v.name == "u"; });
  return timed_check("generating-3phi2", std::move(params), tol, Criterion::relative, [&](IdentityReport& r) {
    const PochOrder inf = PochOrder::infinite();
    auto f = [&](double y) {
      return q_pochhammer_multi({g.b * y * g.z, y * g.t}, inf, ctx) / q_pochhammer_multi({y * g.s, y * g.z}, inf, ctx);
    };
    const SeriesResult lhs = fractional_q_integral(f, g.x, g.a, FractionalOrder(g.mu), ctx);
    r.lhs = lhs.value;
    r.lhs_diag = operator_diag(lhs);

    const Complex a = g.a;
    const Complex numer[] = {a * g.s, a * g.z};
    const Complex denom[] = {a * g.b * g.z, a * g.t};
    detail::FractionalKSum ksum(g.x, g.a, g.mu, ctx);
    const auto s = ksum.sum(numer, denom);
    r.rhs = std::pow(1.0 - ctx.q, g.mu) * inf_ratio({denom[0], denom[1]}, {numer[0], numer[1]}, ctx) * s.value;
    r.rhs_diag = closed_diag("k-sum", s.k_terms);
  });
}

IdentityReport check_cauchy_reciprocal(const CauchyParams& p, double tol, const CheckSettings& settings) {
  p.validate();
  const QContext ctx = settings.ctx.with_base(p.q);
  return timed_check("cauchy-reciprocal", p.to_params(), tol, Criterion::relative, [&](IdentityReport& r) {
    const ExtReal q(p.q);
    const ExtComplex t(p.t);
    auto f = [&](const ExtComplex& c) {
      return ExtComplex(ExtReal(1)) / q_pochhammer_infinite_ext(c * t, q);
    };
    r.lhs = cauchy_T_apply(ExtComplex(p.a), ExtComplex(p.b), f, ExtComplex(p.c), p.n_max, ctx).to_complex();
    r.lhs_diag = closed_diag("operator expansion (extended precision)");
    r.lhs_diag.terms = p.n_max + 1;
    r.rhs = cauchy_T_reciprocal_closed(p.a, p.b, p.c, p.t, ctx);
    r.rhs_diag = closed_diag("closed product");
  });
}

}  // namespace qaw
