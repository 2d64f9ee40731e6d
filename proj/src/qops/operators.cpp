#include <cmath>
#include <sstream>
#include <vector>

#include "qaw/errors.hpp"
#include "qaw/qops.hpp"

namespace qaw {

Complex q_difference(const ComplexFunction& f, Complex c, double q) {
  if (c == Complex(0.0)) throw DomainError("q_difference: D_c is undefined at c = 0");
  return (f(c) - f(c * q)) / c;
}

namespace {

double magnitude(const Complex& z) { return std::abs(z); }
double magnitude(const ExtComplex& z) { return z.magnitude(); }
bool is_zero(const Complex& z) { return z == Complex(0.0); }
bool is_zero(const ExtComplex& z) { return z.is_zero(); }

// The recursion is identical for both scalar types; only the arithmetic differs.
template <class S, class F>
S cauchy_impl(const S& a, const S& b, const F& f, const S& c, int n_max, const S& q, const S& one,
              const QContext& ctx) {
  if (n_max < 0) throw DomainError("cauchy_T_apply: n_max must be nonnegative");
  if (is_zero(c)) throw DomainError("cauchy_T_apply: c must be nonzero");

  // vals[i] holds (D_c^j f)(c q^i) after pass j.
  std::vector<S> points(static_cast<std::size_t>(n_max) + 1);
  std::vector<S> vals(points.size());
  S cq = c;
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = cq;
    vals[i] = f(cq);
    cq = cq * q;
  }

  S sum = vals[0];
  S coef = one;  // (a;q)_n/(q;q)_n b^n
  S qn = one;    // q^{n-1}
  std::vector<double> mags{magnitude(vals[0])};
  for (int n = 1; n <= n_max; ++n) {
    for (int i = 0; i + n <= n_max; ++i) vals[i] = (vals[i] - vals[i + 1]) / points[i];
    const S qn_next = qn * q;
    coef = coef * (one - a * qn) / (one - qn_next) * b;
    qn = qn_next;
    const S term = coef * vals[0];
    sum += term;
    mags.push_back(magnitude(term));
  }

  // Non-decaying tail: the last terms neither negligible nor shrinking.
  if (n_max >= 3) {
    const double s = magnitude(sum);
    const auto m = mags.size();
    const bool negligible = mags[m - 1] <= ctx.eps_term * s;
    const bool shrinking = mags[m - 1] < mags[m - 2] && mags[m - 2] < mags[m - 3];
    if (!negligible && !shrinking) {
      std::ostringstream os;
      os << "cauchy_T_apply: terms are not decaying at n_max = " << n_max << " (|term| = " << mags[m - 1]
         << ")";
      Complex partial;
      if constexpr (std::is_same_v<S, Complex>)
        partial = sum;
      else
        partial = sum.to_complex();
      throw NonConvergence(os.str(), partial, mags[m - 1], n_max);
    }
  }
  return sum;
}

}  // namespace

Complex cauchy_T_apply(Complex a, Complex b, const ComplexFunction& f, Complex c, int n_max,
                       const QContext& ctx) {
  ctx.validate();
  return cauchy_impl(a, b, f, c, n_max, Complex(ctx.q), Complex(1.0), ctx);
}

int cauchy_required_digits(int n_max, double q, double abs_c) {
  const double n = n_max;
  const double lost = 0.5 * n * (n - 1.0) * std::log10(1.0 / q) +
                      n * std::max(0.0, std::log10(1.0 / abs_c)) + n * std::log10(2.0);
  return static_cast<int>(std::ceil(lost)) + 20;
}

ExtComplex cauchy_T_apply(const ExtComplex& a, const ExtComplex& b, const ExtFunction& f,
                          const ExtComplex& c, int n_max, const QContext& ctx) {
  ctx.validate();
  const int need = cauchy_required_digits(n_max, ctx.q, c.magnitude());
  if (need > static_cast<int>(kExtendedDigits)) {
    std::ostringstream os;
    os << "cauchy_T_apply: n_max = " << n_max << " needs about " << need << " digits, more than the "
       << kExtendedDigits << " available";
    throw DomainError(os.str());
  }
  return cauchy_impl(a, b, f, c, n_max, ExtComplex(ExtReal(ctx.q)), ExtComplex(ExtReal(1)), ctx);
}

Complex cauchy_T_reciprocal_closed(Complex a, Complex b, Complex c, Complex t, const QContext& ctx) {
  if (std::max(std::abs(b * t), std::abs(c * t)) >= 1.0)
    throw DomainError("cauchy_T_reciprocal_closed requires max(|bt|, |ct|) < 1");
  const auto inf = PochOrder::infinite();
  return q_pochhammer(a * b * t, inf, ctx) /
         (q_pochhammer(b * t, inf, ctx) * q_pochhammer(c * t, inf, ctx));
}

Complex difference_eq_residual(const TriFunction& f, Complex a, Complex b, Complex c, double q) {
  return (c - b) * f(a, b, c) - a * b * f(a, b * q, c * q) + b * f(a, b, c * q) -
         (c - a * b) * f(a, b * q, c);
}

}  // namespace qaw
