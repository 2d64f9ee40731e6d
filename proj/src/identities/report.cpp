#include <algorithm>
#include <cmath>

#include "qaw/errors.hpp"
#include "qaw/identities.hpp"

namespace qaw {

namespace {

constexpr double kTiny = 1e-300;

void require_fractional(double a, double x, double mu) {
  if (!(mu > 0.0)) throw DomainError("mu must be positive");
  if (!(a > 0.0 && a < x && x < 1.0)) throw DomainError("need 0 < a < x < 1");
}

void require_base(double q) {
  if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0, 1)");
}

double real_lower_limit(Complex a) {
  if (a.imag() != 0.0) throw DomainError("a must be real in the fractional identities");
  return a.real();
}

ParamList four(Complex a, Complex b, Complex c, Complex d) {
  return {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
    case CheckStatus::diverged: return "diverged";
  }
  return "failed";
}

void score(IdentityReport& r) {
  r.abs_err = std::abs(r.lhs - r.rhs);
  const double scale = std::max({std::abs(r.lhs), std::abs(r.rhs), kTiny});
  r.rel_err = r.abs_err / scale;
  const bool both_tiny = std::abs(r.lhs) < kTiny && std::abs(r.rhs) < kTiny;
  if (r.criterion == Criterion::absolute || both_tiny)
    r.passed = r.abs_err <= r.tolerance;
  else
    r.passed = r.rel_err <= r.tolerance;
  r.status = r.passed ? CheckStatus::passed : CheckStatus::failed;
}

void GeneratingParams::validate() const {
  require_base(q);
  require_fractional(a, x, mu);
  if (std::max({std::abs(a * t), std::abs(a * z), std::abs(a * r * u)}) >= 1.0)
    throw DomainError("need max(|at|, |az|, |aru|) < 1");
}

ParamList GeneratingParams::to_params() const {
  return {{"a", a}, {"b", b}, {"r", r}, {"s", s}, {"t", t}, {"u", u}, {"z", z},
          {"x", x}, {"mu", mu}, {"q", q}};
}

void AWParams::validate() const {
  require_base(q);
  if (std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) >= 1.0)
    throw DomainError("need max(|a|, |b|, |c|, |d|) < 1");
}

void AWParams::validate_fractional() const {
  validate();
  require_fractional(real_lower_limit(a), x, mu);
}

ParamList AWParams::to_params(bool fractional) const {
  ParamList p = four(a, b, c, d);
  if (fractional) {
    p.push_back({"x", x});
    p.push_back({"mu", mu});
  }
  p.push_back({"q", q});
  return p;
}

void ReversalParams::validate() const {
  require_base(q);
  if (std::abs(q * a * b * c * d) >= 1.0) throw DomainError("need |q a b c d| < 1");
}

void ReversalParams::validate_fractional() const {
  validate();
  require_fractional(real_lower_limit(a), x, mu);
}

ParamList ReversalParams::to_params(bool fractional) const {
  ParamList p = four(a, b, c, d);
  if (fractional) {
    p.push_back({"x", x});
    p.push_back({"mu", mu});
  }
  p.push_back({"q", q});
  return p;
}

double AtakishiyevParams::q() const { return std::exp(-2.0 * alpha_g * alpha_g); }

void AtakishiyevParams::validate() const {
  if (!(alpha_g != 0.0) || !std::isfinite(alpha_g)) throw DomainError("alpha_g must be finite and nonzero");
  const double qq = q();
  require_base(qq);
  if (std::abs(a * b * c * d / (qq * qq * qq)) >= 1.0) throw DomainError("need |a b c d / q^3| < 1");
}

void AtakishiyevParams::validate_fractional() const {
  validate();
  require_fractional(real_lower_limit(a), x, mu);
}

ParamList AtakishiyevParams::to_params(bool fractional) const {
  ParamList p = four(a, b, c, d);
  if (fractional) {
    p.push_back({"x", x});
    p.push_back({"mu", mu});
  }
  p.push_back({"alpha_g", alpha_g});
  return p;
}

void CauchyParams::validate() const {
  require_base(q);
  if (c == Complex(0.0)) throw DomainError("c must be nonzero");
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (std::max(std::abs(b * t), std::abs(c * t)) >= 1.0) throw DomainError("need max(|bt|, |ct|) < 1");
}

ParamList CauchyParams::to_params() const {
  return {{"a", a}, {"b", b}, {"c", c}, {"t", t}, {"q", q}, {"n_max", static_cast<double>(n_max)}};
}

}  // namespace qaw
