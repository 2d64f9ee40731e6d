#include <algorithm>
#include <cmath>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/qcore.hpp"

namespace qaw {

namespace {

constexpr double kTerminatingTol = 1e-12;
constexpr double kZeroFactor = 4.0 * std::numeric_limits<double>::epsilon();

// Smallest k with |p - q^{-k}| < tol * q^{-k}, if any.
std::optional<int> match_negative_power(Complex p, double q, int max_k) {
  if (p.real() < 1.0 - kTerminatingTol) return std::nullopt;
  const double k_est = std::log(p.real()) / -std::log(q);
  const double k = std::round(k_est);
  if (k < 0 || k > max_k) return std::nullopt;
  const double target = std::pow(q, -k);
  if (std::abs(p - target) < kTerminatingTol * target) return static_cast<int>(k);
  return std::nullopt;
}

}  // namespace

struct PhiSeriesAccess {
  static std::optional<std::size_t> k_index(const HypergeometricSpec& s) { return s.k_index_; }
};

HypergeometricSpec::HypergeometricSpec(std::vector<Complex> numer, std::vector<Complex> denom,
                                       Complex z, double base)
    : numer_(std::move(numer)), denom_(std::move(denom)), z_(z), base_(base) {
  QContext(base).validate();
  for (std::size_t i = 0; i < numer_.size(); ++i) {
    if (auto k = match_negative_power(numer_[i], base_, 1'000'000)) {
      if (!k_ || *k < *k_) {
        k_ = *k;
        k_index_ = i;
      }
    }
  }
}

HypergeometricSpec HypergeometricSpec::terminating(int k, std::vector<Complex> numer,
                                                   std::vector<Complex> denom, Complex z, double base) {
  if (k < 0) throw DomainError("terminating order k must be nonnegative");
  QContext(base).validate();
  HypergeometricSpec s;
  s.numer_.reserve(numer.size() + 1);
  s.numer_.push_back(std::pow(base, -static_cast<double>(k)));
  s.numer_.insert(s.numer_.end(), numer.begin(), numer.end());
  s.denom_ = std::move(denom);
  s.z_ = z;
  s.base_ = base;
  s.k_ = k;
  s.k_index_ = 0;
  return s;
}

SeriesResult phi_series_eval(const HypergeometricSpec& spec, const QContext& policy) {
  const QContext ctx = policy.with_base(spec.base());
  const double q = ctx.q;
  const auto r = static_cast<int>(spec.numer().size());
  const auto s = static_cast<int>(spec.denom().size());
  const int balance = 1 + s - r;
  const auto k = spec.terminating_order();
  const auto k_slot = PhiSeriesAccess::k_index(spec);

  if (!k) {
    if (r > s + 1) throw DomainError("non-terminating r-phi-s with r > s+1 diverges");
    if (r == s + 1 && std::abs(spec.z()) >= 1.0)
      throw DomainError("non-terminating r-phi-(r-1) requires |z| < 1");
  }

  Complex sum(0.0);
  Complex term(1.0);
  double qn = 1.0;  // q^n
  int small = 0;
  for (int n = 0;; ++n) {
    sum += term;
    if (k && n == *k) return {sum, n + 1, std::abs(term)};
    if (!k) {
      small = (std::abs(term) <= ctx.eps_term * std::abs(sum)) ? small + 1 : 0;
      if (small >= ctx.consecutive_small) return {sum, n + 1, std::abs(term)};
      if (n + 1 >= ctx.max_terms)
        throw NonConvergence("phi_series: no convergence within max_terms", sum, std::abs(term), n + 1);
    }

    Complex ratio = spec.z();
    for (int i = 0; i < r; ++i) {
      if (k_slot && static_cast<std::size_t>(i) == *k_slot)
        ratio *= 1.0 - std::pow(q, n - *k);
      else
        ratio *= 1.0 - spec.numer()[i] * qn;
    }
    Complex den = 1.0 - qn * q;
    for (int j = 0; j < s; ++j) {
      const Complex f = 1.0 - spec.denom()[j] * qn;
      if (std::abs(f) <= kZeroFactor) {
        std::ostringstream os;
        os << "phi_series: denominator parameter " << j << " equals q^-" << n;
        throw DivisionByZero(os.str());
      }
      den *= f;
    }
    ratio /= den;
    if (balance != 0) ratio *= std::pow(-qn, balance);
    term *= ratio;
    qn *= q;
  }
}

std::vector<Complex> terminating_phi_q_family(std::span<const Complex> numer,
                                              std::span<const Complex> denom, int k_max,
                                              const QContext& ctx) {
  ctx.validate();
  if (numer.size() != denom.size())
    throw DomainError("terminating_phi_q_family needs as many denominator as free numerator parameters");
  if (k_max < 0) throw DomainError("k_max must be nonnegative");
  for (const Complex& a : numer)
    if (std::abs(a) >= 1.0)
      throw DomainError("terminating_phi_q_family requires |numerator parameter| < 1");

  const double q = ctx.q;
  const std::size_t r = numer.size();

  // Coefficients of prod (1 - p y), lowest degree first.
  auto poly = [](std::span<const Complex> roots) {
    std::vector<Complex> c{Complex(1.0)};
    for (const Complex& p : roots) {
      c.push_back(Complex(0.0));
      for (std::size_t i = c.size() - 1; i > 0; --i) c[i] -= p * c[i - 1];
    }
    return c;
  };
  const std::vector<Complex> pa = poly(numer);
  const std::vector<Complex> pb = poly(denom);

  // g_m (1 - q^m) = sum_{l=1..r} g_{m-l} (q^{m-l} pb_l - pa_l)
  std::vector<Complex> g{Complex(1.0)};
  std::vector<double> qpow{1.0};
  constexpr double kRescaleAbove = 1e150;
  const int min_len = k_max + static_cast<int>(r) + 2;
  const int needed_small = std::max(ctx.consecutive_small, static_cast<int>(r) + 1);
  double envelope = 0.0;
  int small = 0;
  for (int m = 1;; ++m) {
    if (m >= ctx.max_terms)
      throw NonConvergence("terminating_phi_q_family: coefficient tail did not decay", g.back(),
                           std::abs(g.back()), m);
    qpow.push_back(qpow.back() * q);
    Complex acc(0.0);
    for (std::size_t l = 1; l <= r && l <= static_cast<std::size_t>(m); ++l)
      acc += g[m - l] * (qpow[m - l] * pb[l] - pa[l]);
    g.push_back(acc / (1.0 - qpow[m]));

    if (std::abs(g.back()) > kRescaleAbove) {
      for (Complex& v : g) v /= kRescaleAbove;
      envelope /= kRescaleAbove;
    }
    if (m >= k_max - static_cast<int>(r)) envelope = std::max(envelope, std::abs(g.back()));
    if (m > k_max) {
      small = (std::abs(g.back()) <= ctx.eps_term * envelope) ? small + 1 : 0;
      if (m >= min_len && (small >= needed_small || envelope == 0.0)) break;
    }
  }

  const std::size_t n_len = g.size();
  Complex total(0.0);
  for (const Complex& v : g) total += v;
  if (total == Complex(0.0))
    throw DivisionByZero("terminating_phi_q_family: product normaliser vanishes");

  std::vector<Complex> out(static_cast<std::size_t>(k_max) + 1);
  double qq_k = 1.0;  // (q;q)_k
  for (int k = 0; k <= k_max; ++k) {
    if (k > 0) qq_k *= 1.0 - qpow[k];
    Complex inner(0.0);
    double w = qq_k;  // (q;q)_n / (q;q)_{n-k} at n = k
    for (std::size_t n = static_cast<std::size_t>(k); n < n_len; ++n) {
      inner += g[n] * w;
      const double qn1 = qpow[n] * q;
      w *= (1.0 - qn1) / (1.0 - qpow[n - k] * q);
    }
    out[k] = inner / total;
  }
  return out;
}

}  // namespace qaw
