#pragma once

// Scalar q-calculus building blocks: q-shifted factorials of integer,
// infinite and real order, the q-bracket and q-gamma, basic hypergeometric
// series, and the h(.) weight products used by the Askey-Wilson family.

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace qaw {

using Complex = std::complex<double>;

/// Base q together with every truncation policy knob used by series and
/// products. All evaluation entry points take one by const reference.
struct QContext {
  double q = 0.5;
  double eps_term = 1e-15;    ///< relative tail tolerance for series
  double eps_factor = 1e-17;  ///< product factor cutoff |a q^k|
  int max_terms = 10'000;
  int max_factors = 10'000;
  int consecutive_small = 3;  ///< below-tolerance terms needed to stop a series

  QContext() = default;
  explicit QContext(double base) : q(base) { validate(); }

  /// Throws DomainError unless 0 < q < 1 and all policy values are positive.
  void validate() const;

  /// Same policy, different base.
  QContext with_base(double base) const {
    QContext c = *this;
    c.q = base;
    c.validate();
    return c;
  }
};

/// Order of a q-Pochhammer symbol: a nonnegative integer, infinity, or a real
/// number. Real orders use (a;q)_alpha = (a;q)_inf / (a q^alpha;q)_inf.
class PochOrder {
 public:
  struct Finite { int n; };
  struct Infinite {};
  struct Real { double alpha; };

  static PochOrder finite(int n);
  static PochOrder infinite() { return PochOrder(Infinite{}); }
  /// Any finite real order. Integer-valued orders take the finite-product path.
  static PochOrder real(double alpha);

  bool is_infinite() const { return std::holds_alternative<Infinite>(v_); }
  const std::variant<Finite, Infinite, Real>& get() const { return v_; }

 private:
  template <class T>
  explicit PochOrder(T v) : v_(v) {}
  std::variant<Finite, Infinite, Real> v_;
};

/// Complex number in polar log form: exp(log_abs + i*arg). Used wherever the
/// individual factors of a product overflow but the final ratio is tame.
struct LogValue {
  double log_abs = 0.0;
  double arg = 0.0;

  static LogValue zero() { return {-std::numeric_limits<double>::infinity(), 0.0}; }
  static LogValue from(Complex z) {
    if (z == Complex(0.0)) return zero();
    return {std::log(std::abs(z)), std::arg(z)};
  }
  bool is_zero() const { return log_abs == -std::numeric_limits<double>::infinity(); }
  Complex to_complex() const { return is_zero() ? Complex(0.0) : std::polar(std::exp(log_abs), arg); }

  LogValue& operator*=(const LogValue& o) {
    log_abs += o.log_abs;
    arg += o.arg;
    return *this;
  }
  LogValue& operator/=(const LogValue& o);
  friend LogValue operator*(LogValue a, const LogValue& b) { return a *= b; }
  friend LogValue operator/(LogValue a, const LogValue& b) { return a /= b; }
};

/// Truncation record of one infinite product.
struct ProductTrace {
  int factors = 0;
  double tail_bound = 0.0;  ///< bound on |log| of the omitted factors
};

Complex q_pochhammer(Complex a, const PochOrder& order, const QContext& ctx,
                     ProductTrace* trace = nullptr);
Complex q_pochhammer_multi(std::span<const Complex> params, const PochOrder& order,
                           const QContext& ctx);
Complex q_pochhammer_multi(std::initializer_list<Complex> params, const PochOrder& order,
                           const QContext& ctx);

/// (a;q)_inf accumulated as log-magnitude plus phase.
LogValue q_pochhammer_log(Complex a, const QContext& ctx, ProductTrace* trace = nullptr);

/// [a]_q = (1 - q^a)/(1 - q)
double q_bracket(double a, const QContext& ctx);

/// Gamma_q(x) = (q;q)_inf / (q^x;q)_inf * (1-q)^(1-x); PoleError at 0,-1,-2,...
double q_gamma(double x, const QContext& ctx);

/// Numerator/denominator parameters of an r-phi-s series plus argument and
/// base. A numerator parameter equal to q^{-k} makes the series terminate.
class HypergeometricSpec {
 public:
  /// Detects a terminating parameter |p - q^{-k}| < 1e-12 q^{-k}.
  HypergeometricSpec(std::vector<Complex> numer, std::vector<Complex> denom, Complex z, double base);

  /// Series with q^{-k} prepended to `numer`; no detection involved.
  static HypergeometricSpec terminating(int k, std::vector<Complex> numer, std::vector<Complex> denom,
                                        Complex z, double base);

  const std::vector<Complex>& numer() const { return numer_; }
  const std::vector<Complex>& denom() const { return denom_; }
  Complex z() const { return z_; }
  double base() const { return base_; }
  std::optional<int> terminating_order() const { return k_; }

 private:
  HypergeometricSpec() = default;
  std::vector<Complex> numer_;
  std::vector<Complex> denom_;
  Complex z_;
  double base_ = 0.5;
  std::optional<int> k_;
  std::optional<std::size_t> k_index_;  // which numerator slot is q^{-k}
  friend struct PhiSeriesAccess;
};

struct SeriesResult {
  Complex value;
  int terms = 0;
  double last_term = 0.0;
};

SeriesResult phi_series_eval(const HypergeometricSpec& spec, const QContext& ctx);
inline Complex phi_series(const HypergeometricSpec& spec, const QContext& ctx) {
  return phi_series_eval(spec, ctx).value;
}

/// Values of the terminating series
///   {}_{r+1}phi_r [q^{-k}, A_1..A_r ; B_1..B_r ; q, q]   for k = 0..k_max.
///
/// Direct summation loses roughly k^2/2 * log10(1/q) digits to cancellation.
/// Instead we use
///   phi_k = sum_{n>=k} g_n (q;q)_n/(q;q)_{n-k}  /  sum_n g_n,
/// where g_n are the Maclaurin coefficients of prod_i (B_i y;q)_inf/(A_i y;q)_inf,
/// generated from G(y) P_A(y) = G(qy) P_B(y). Requires max|A_i| < 1.
std::vector<Complex> terminating_phi_q_family(std::span<const Complex> numer,
                                              std::span<const Complex> denom, int k_max,
                                              const QContext& ctx);

/// h(cos theta; a_1..a_m) = prod (a e^{i theta}, a e^{-i theta}; q)_inf
Complex h_cos(double theta, std::span<const Complex> params, const QContext& ctx);
Complex h_cos(double theta, std::initializer_list<Complex> params, const QContext& ctx);

/// h(i sinh x; t) = (i t e^x, -i t e^{-x}; q)_inf. Throws Overflow when the
/// linear value is not representable; h_sinh_log never does.
Complex h_sinh(double x, Complex t, const QContext& ctx);
LogValue h_sinh_log(double x, Complex t, const QContext& ctx);

/// h(cosh x; t) = (t e^x, t e^{-x}; q)_inf in log form.
LogValue h_cosh_log(double x, Complex t, const QContext& ctx);

}  // namespace qaw
