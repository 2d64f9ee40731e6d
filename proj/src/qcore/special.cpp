#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/qcore.hpp"

namespace qaw {

double q_bracket(double a, const QContext& ctx) {
  ctx.validate();
  // expm1 keeps [a]_q accurate for a near 0
  return -std::expm1(a * std::log(ctx.q)) / (1.0 - ctx.q);
}

double q_gamma(double x, const QContext& ctx) {
  ctx.validate();
  const double rounded = std::round(x);
  if (rounded <= 0.0 && std::abs(x - rounded) < 1e-12) {
    std::ostringstream os;
    os << "q-gamma has a pole at x = " << rounded;
    throw PoleError(os.str());
  }
  // (q;q)_inf/(q^x;q)_inf is the real-order symbol (q;q)_{x-1}
  const Complex ratio = q_pochhammer(Complex(ctx.q), PochOrder::real(x - 1.0), ctx);
  return ratio.real() * std::pow(1.0 - ctx.q, 1.0 - x);
}

}  // namespace qaw
