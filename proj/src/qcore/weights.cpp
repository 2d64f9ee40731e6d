#include <cmath>

#include "qaw/errors.hpp"
#include "qaw/qcore.hpp"

namespace qaw {

Complex h_cos(double theta, std::span<const Complex> params, const QContext& ctx) {
  const Complex e = std::polar(1.0, theta);
  Complex p(1.0);
  for (const Complex& a : params) {
    if (a == Complex(0.0)) continue;
    p *= q_pochhammer(a * e, PochOrder::infinite(), ctx) *
         q_pochhammer(a * std::conj(e), PochOrder::infinite(), ctx);
  }
  return p;
}

Complex h_cos(double theta, std::initializer_list<Complex> params, const QContext& ctx) {
  return h_cos(theta, std::span<const Complex>(params.begin(), params.size()), ctx);
}

LogValue h_sinh_log(double x, Complex t, const QContext& ctx) {
  if (t == Complex(0.0)) return {};
  const Complex i(0.0, 1.0);
  return q_pochhammer_log(i * t * std::exp(x), ctx) * q_pochhammer_log(-i * t * std::exp(-x), ctx);
}

Complex h_sinh(double x, Complex t, const QContext& ctx) {
  const LogValue v = h_sinh_log(x, t, ctx);
  if (v.log_abs > std::log(std::numeric_limits<double>::max()))
    throw Overflow("h(i sinh x; t) overflows double precision; use h_sinh_log");
  return v.to_complex();
}

LogValue h_cosh_log(double x, Complex t, const QContext& ctx) {
  if (t == Complex(0.0)) return {};
  return q_pochhammer_log(t * std::exp(x), ctx) * q_pochhammer_log(t * std::exp(-x), ctx);
}

}  // namespace qaw
