#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/qcore.hpp"

namespace qaw {

void QContext::validate() const {
  if (!(q > 0.0 && q < 1.0)) {
    std::ostringstream os;
    os << "base q must satisfy 0 < q < 1 (got " << q << ")";
    throw DomainError(os.str());
  }
  if (!(eps_term > 0.0) || !(eps_factor > 0.0)) throw DomainError("tolerances must be positive");
  if (max_terms <= 0 || max_factors <= 0 || consecutive_small <= 0)
    throw DomainError("term/factor caps must be positive integers");
}

PochOrder PochOrder::finite(int n) {
  if (n < 0) throw DomainError("finite Pochhammer order must be nonnegative");
  return PochOrder(Finite{n});
}

PochOrder PochOrder::real(double alpha) {
  if (!std::isfinite(alpha)) throw DomainError("real Pochhammer order must be finite");
  return PochOrder(Real{alpha});
}

LogValue& LogValue::operator/=(const LogValue& o) {
  if (o.is_zero()) throw DivisionByZero("division by a zero log-domain value");
  log_abs -= o.log_abs;
  arg -= o.arg;
  return *this;
}

namespace {

constexpr double kIntegerTol = 1e-12;
constexpr double kZeroFactor = 4.0 * std::numeric_limits<double>::epsilon();

// Tail bound sum_{j>=k} |a|q^j/(1-|a|q^j) <= m/((1-q)(1-m)) with m = |a q^k| < 1.
double tail_bound(double m, double q) { return m / ((1.0 - q) * (1.0 - m)); }

bool stop_product(double m, const QContext& ctx) {
  return m < ctx.eps_factor && tail_bound(m, ctx.q) < ctx.eps_term;
}

[[noreturn]] void product_cap(Complex partial, double m, int k) {
  throw NonConvergence("infinite product did not reach the factor cutoff within max_factors",
                       partial, m, k);
}

Complex finite_product(Complex a, int n, double q) {
  Complex p(1.0);
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    p *= 1.0 - a * qk;
    qk *= q;
  }
  return p;
}

Complex infinite_product(Complex a, const QContext& ctx, ProductTrace* trace) {
  Complex p(1.0);
  Complex term = a;
  for (int k = 0;; ++k) {
    const double m = std::abs(term);
    if (stop_product(m, ctx)) {
      if (trace) *trace = {k, tail_bound(m, ctx.q)};
      return p;
    }
    if (k >= ctx.max_factors) product_cap(p, m, k);
    p *= 1.0 - term;
    term *= ctx.q;
  }
}

// (a;q)_inf / (a q^alpha;q)_inf as one product of factor ratios.
Complex ratio_product(Complex a, double alpha, const QContext& ctx, ProductTrace* trace) {
  const double shift = std::pow(ctx.q, alpha);
  Complex num = a;
  Complex den = a * shift;
  Complex p(1.0);
  for (int k = 0;; ++k) {
    const double m = std::max(std::abs(num), std::abs(den));
    if (stop_product(m, ctx)) {
      if (trace) *trace = {k, 2.0 * tail_bound(m, ctx.q)};
      return p;
    }
    if (k >= ctx.max_factors) product_cap(p, m, k);
    const Complex fn = 1.0 - num;
    if (fn == Complex(0.0)) {
      if (trace) *trace = {k + 1, 0.0};
      return Complex(0.0);
    }
    const Complex fd = 1.0 - den;
    if (std::abs(fd) <= kZeroFactor) {
      // A zero further along the numerator would cancel; otherwise this is a pole.
      Complex probe = num * ctx.q;
      for (int j = k + 1; j < ctx.max_factors && std::abs(probe) >= ctx.eps_factor; ++j) {
        if (std::abs(1.0 - probe) <= kZeroFactor) return Complex(0.0);
        probe *= ctx.q;
      }
      throw DivisionByZero("fractional q-Pochhammer: denominator factor 1 - a q^(alpha+k) vanishes");
    }
    p *= fn / fd;
    num *= ctx.q;
    den *= ctx.q;
  }
}

}  // namespace

Complex q_pochhammer(Complex a, const PochOrder& order, const QContext& ctx, ProductTrace* trace) {
  ctx.validate();
  Complex result;
  const auto& v = order.get();
  if (const auto* f = std::get_if<PochOrder::Finite>(&v)) {
    result = finite_product(a, f->n, ctx.q);
    if (trace) *trace = {f->n, 0.0};
  } else if (std::holds_alternative<PochOrder::Infinite>(v)) {
    result = infinite_product(a, ctx, trace);
  } else {
    const double alpha = std::get<PochOrder::Real>(v).alpha;
    const double rounded = std::round(alpha);
    if (std::abs(alpha - rounded) < kIntegerTol && std::abs(rounded) < 1e9) {
      const int n = static_cast<int>(rounded);
      if (n >= 0) {
        result = finite_product(a, n, ctx.q);
      } else {
        // (a;q)_{-m} = 1 / (a q^{-m};q)_m
        const Complex d = finite_product(a * std::pow(ctx.q, n), -n, ctx.q);
        if (std::abs(d) <= kZeroFactor)
          throw DivisionByZero("negative-order q-Pochhammer has a vanishing denominator");
        result = 1.0 / d;
      }
      if (trace) *trace = {std::abs(n), 0.0};
    } else {
      result = ratio_product(a, alpha, ctx, trace);
    }
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
    throw Overflow("q-Pochhammer value is not representable; use the log-domain form");
  return result;
}

Complex q_pochhammer_multi(std::span<const Complex> params, const PochOrder& order,
                           const QContext& ctx) {
  Complex p(1.0);
  for (const Complex& a : params) p *= q_pochhammer(a, order, ctx);
  return p;
}

Complex q_pochhammer_multi(std::initializer_list<Complex> params, const PochOrder& order,
                           const QContext& ctx) {
  return q_pochhammer_multi(std::span<const Complex>(params.begin(), params.size()), order, ctx);
}

LogValue q_pochhammer_log(Complex a, const QContext& ctx, ProductTrace* trace) {
  ctx.validate();
  LogValue acc;
  Complex term = a;
  for (int k = 0;; ++k) {
    const double m = std::abs(term);
    if (stop_product(m, ctx)) {
      if (trace) *trace = {k, tail_bound(m, ctx.q)};
      return acc;
    }
    if (k >= ctx.max_factors) product_cap(acc.to_complex(), m, k);
    const Complex f = 1.0 - term;
    if (f == Complex(0.0)) return LogValue::zero();
    acc.log_abs += std::log(std::abs(f));
    acc.arg += std::arg(f);
    term *= ctx.q;
  }
}

}  // namespace qaw
