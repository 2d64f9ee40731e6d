#include "identities/ksum.hpp"

#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"

namespace qaw::detail {

namespace {

std::vector<Complex> nonzero(std::span<const Complex> v) {
  std::vector<Complex> out;
  for (const Complex& z : v)
    if (z != Complex(0.0)) out.push_back(z);
  return out;
}

}  // namespace

FractionalKSum::FractionalKSum(double x, double a, double mu, const QContext& ctx)
    : x_(x), a_(a), mu_(mu), ctx_(ctx) {
  if (!(a > 0.0 && a < x)) throw DomainError("k-sum needs 0 < a < x");
  if (!(mu > 0.0)) throw DomainError("k-sum needs mu > 0");
}

double FractionalKSum::log_c(int k) {
  while (static_cast<int>(log_c_.size()) <= k) {
    const int j = static_cast<int>(log_c_.size());
    const double order = mu_ + j;
    const Complex num = q_pochhammer(a_ / x_, PochOrder::real(order), ctx_);
    const Complex den = q_pochhammer(ctx_.q, PochOrder::real(order), ctx_);
    log_c_.push_back(order * std::log(x_) - j * std::log(a_) + std::log(std::abs(num)) -
                     std::log(std::abs(den)));
  }
  return log_c_[k];
}

double fractional_weight(double x, double a, double mu, const QContext& ctx) {
  const Complex num = q_pochhammer(a / x, PochOrder::real(mu), ctx);
  const Complex den = q_pochhammer(ctx.q, PochOrder::real(mu), ctx);
  return std::pow(x, mu) * num.real() / den.real();
}

FractionalKSum::Result FractionalKSum::sum(std::span<const Complex> numer, std::span<const Complex> denom) {
  std::vector<Complex> A = nonzero(numer);
  std::vector<Complex> B = nonzero(denom);
  // unequal lengths are padded back with zeros; the family needs r free
  // numerator and r denominator parameters
  while (A.size() < B.size()) A.push_back(Complex(0.0));
  while (B.size() < A.size()) B.push_back(Complex(0.0));

  for (int k_max = k_hint_;; k_max *= 2) {
    if (k_max > ctx_.max_terms)
      throw NonConvergence("k-sum did not settle within max_terms", Complex(0.0), 0.0, k_max);
    const std::vector<Complex> phi = terminating_phi_q_family(A, B, k_max, ctx_);

    Complex s(0.0);
    int small = 0;
    int growth = 0;
    double prev = -1.0;
    for (int k = 0; k <= k_max; ++k) {
      const double mag = std::abs(phi[k]);
      const Complex term = mag == 0.0 ? Complex(0.0)
                                      : std::polar(std::exp(log_c(k) + std::log(mag)), std::arg(phi[k]));
      const double t = std::abs(term);
      s += term;
      growth = (prev >= 0.0 && t > prev) ? growth + 1 : 0;
      if (growth >= kGrowthLimit) {
        std::ostringstream os;
        os << "k-sum terms grew for " << kGrowthLimit << " consecutive k (k = " << k << ", |term| = " << t << ")";
        throw KSumDivergence(os.str(), k, t);
      }
      prev = t;
      small = (t <= ctx_.eps_term * std::abs(s)) ? small + 1 : 0;
      if (small >= ctx_.consecutive_small) {
        k_hint_ = k_max;
        return {s, k + 1};
      }
    }
  }
}

}  // namespace qaw::detail
