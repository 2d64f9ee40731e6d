#pragma once

// Operator layer: Thomae-Jackson q-integral, the generalized fractional
// q-integral with lower limit a, the q-difference operator D_c, the Cauchy
// operator T(a, b D_c), and the three-variable difference-equation residual.

#include <functional>

#include "qaw/extended.hpp"
#include "qaw/qcore.hpp"

namespace qaw {

/// Pure, deterministic function of a real point.
using RealIntegrand = std::function<Complex(double)>;
/// Pure, deterministic function of a complex point.
using ComplexFunction = std::function<Complex(Complex)>;
using ExtFunction = std::function<ExtComplex(const ExtComplex&)>;
/// (a, b, c) -> f(a, b, c)
using TriFunction = std::function<Complex(Complex, Complex, Complex)>;

/// Order mu > 0 of the fractional q-integral.
class FractionalOrder {
 public:
  explicit FractionalOrder(double mu);
  double value() const { return mu_; }

 private:
  double mu_;
};

/// int_a^b f d_q t = (1-q) sum_n [b f(b q^n) - a f(a q^n)] q^n
SeriesResult jackson_q_integral(const RealIntegrand& f, double a, double b, const QContext& ctx);

/// (I_{q,a}^mu f)(x) through the two-sided sum
///   x^{mu-1}(1-q)/Gamma_q(mu) * sum_n [x (q^{n+1};q)_{mu-1} f(x q^n)
///                                      - a (a q^{n+1}/x;q)_{mu-1} f(a q^n)] q^n.
/// Requires 0 <= a < x; the a-branch is dropped when a == 0.
SeriesResult fractional_q_integral(const RealIntegrand& f, double x, double a, FractionalOrder mu,
                                   const QContext& ctx);

/// Lower limit 0, evaluated as x^{mu-1}/Gamma_q(mu) times the Jackson
/// integral over [0, x] of (qt/x;q)_{mu-1} f(t). Shares no code with the
/// two-sided sum above beyond qcore.
SeriesResult riemann_liouville_q_integral(const RealIntegrand& f, double x, FractionalOrder mu,
                                          const QContext& ctx);

/// D_c f = (f(c) - f(cq)) / c
Complex q_difference(const ComplexFunction& f, Complex c, double q);

/// sum_{n=0}^{n_max} (a;q)_n/(q;q)_n b^n (D_c^n f)(c), with D_c^n built by
/// repeated differencing of f(c q^j), j = 0..n_max.
///
/// Differencing to order n multiplies rounding error by roughly
/// |c|^-n q^{-n(n-1)/2}; in double precision that caps useful n_max near 8.
/// The extended overload evaluates the same recursion with 500 digits.
Complex cauchy_T_apply(Complex a, Complex b, const ComplexFunction& f, Complex c, int n_max,
                       const QContext& ctx);
ExtComplex cauchy_T_apply(const ExtComplex& a, const ExtComplex& b, const ExtFunction& f,
                          const ExtComplex& c, int n_max, const QContext& ctx);

/// Decimal digits the recursion needs for a result good to ~20 digits.
int cauchy_required_digits(int n_max, double q, double abs_c);

/// T(a, b D_c){1/(ct;q)_inf} = (abt;q)_inf / ((bt;q)_inf (ct;q)_inf), for max(|bt|,|ct|) < 1.
Complex cauchy_T_reciprocal_closed(Complex a, Complex b, Complex c, Complex t, const QContext& ctx);

/// (c-b) f(a,b,c) - ab f(a,bq,cq) + b f(a,b,cq) - (c-ab) f(a,bq,c)
Complex difference_eq_residual(const TriFunction& f, Complex a, Complex b, Complex c, double q);

}  // namespace qaw
