#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/qops.hpp"

namespace qaw {

FractionalOrder::FractionalOrder(double mu) : mu_(mu) {
  if (!(mu > 0.0) || !std::isfinite(mu)) {
    std::ostringstream os;
    os << "fractional order must be a positive real (got " << mu << ")";
    throw DomainError(os.str());
  }
}

namespace {

// Sums term(n) for n = 0, 1, ... under the series stopping rule.
template <class Term>
SeriesResult sum_geometric(const Term& term, const QContext& ctx, const char* who) {
  Complex sum(0.0);
  int small = 0;
  for (int n = 0;; ++n) {
    const Complex t = term(n);
    sum += t;
    small = (std::abs(t) <= ctx.eps_term * std::abs(sum)) ? small + 1 : 0;
    if (small >= ctx.consecutive_small) return {sum, n + 1, std::abs(t)};
    if (n + 1 >= ctx.max_terms) {
      std::ostringstream os;
      os << who << ": terms did not decay within max_terms";
      throw NonConvergence(os.str(), sum, std::abs(t), n + 1);
    }
  }
}

}  // namespace

SeriesResult jackson_q_integral(const RealIntegrand& f, double a, double b, const QContext& ctx) {
  ctx.validate();
  const double q = ctx.q;
  auto term = [&](int n) {
    const double qn = std::pow(q, n);
    Complex t = b == 0.0 ? Complex(0.0) : b * f(b * qn);
    if (a != 0.0) t -= a * f(a * qn);
    return (1.0 - q) * qn * t;
  };
  return sum_geometric(term, ctx, "jackson_q_integral");
}

SeriesResult fractional_q_integral(const RealIntegrand& f, double x, double a, FractionalOrder mu,
                                   const QContext& ctx) {
  ctx.validate();
  if (a < 0.0 || !(a < x)) {
    std::ostringstream os;
    os << "fractional_q_integral requires 0 <= a < x (got a = " << a << ", x = " << x << ")";
    throw DomainError(os.str());
  }
  const double q = ctx.q;
  const PochOrder kernel_order = PochOrder::real(mu.value() - 1.0);
  auto term = [&](int n) {
    const double qn = std::pow(q, n);
    Complex t = x * q_pochhammer(qn * q, kernel_order, ctx) * f(x * qn);
    if (a != 0.0) t -= a * q_pochhammer(a * qn * q / x, kernel_order, ctx) * f(a * qn);
    return t * qn;
  };
  SeriesResult r = sum_geometric(term, ctx, "fractional_q_integral");
  r.value *= std::pow(x, mu.value() - 1.0) * (1.0 - q) / q_gamma(mu.value(), ctx);
  return r;
}

SeriesResult riemann_liouville_q_integral(const RealIntegrand& f, double x, FractionalOrder mu,
                                          const QContext& ctx) {
  ctx.validate();
  if (!(x > 0.0)) throw DomainError("riemann_liouville_q_integral requires x > 0");
  const PochOrder kernel_order = PochOrder::real(mu.value() - 1.0);
  auto kernel = [&](double t) { return q_pochhammer(ctx.q * t / x, kernel_order, ctx) * f(t); };
  SeriesResult r = jackson_q_integral(kernel, 0.0, x, ctx);
  r.value *= std::pow(x, mu.value() - 1.0) / q_gamma(mu.value(), ctx);
  return r;
}

}  // namespace qaw
