#include <doctest.h>

#include <numbers>
#include <thread>

#include "qaw/errors.hpp"
#include "qaw/quad.hpp"
#include "support.hpp"

using namespace qaw;
using std::numbers::pi;

TEST_CASE("Gauss-Legendre exactness on [0, pi]") {
  for (int n : {1, 2, 5, 16, 32}) {
    const auto rule = gauss_legendre(n);
    for (int m = 0; m <= 2 * n - 1; ++m) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += rule->weights[i] * std::pow(0.5 * pi * (rule->nodes[i] + 1.0), m);
      s *= 0.5 * pi;
      CHECK(rel_err(s, std::pow(pi, m + 1) / (m + 1)) < 1e-13);
    }
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("rule cache is shared across threads") {
  std::vector<std::shared_ptr<const GaussLegendreRule>> seen(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i) pool.emplace_back([&, i] { seen[i] = gauss_legendre(48); });
  for (auto& t : pool) t.join();
  for (const auto& r : seen) CHECK(r.get() == seen[0].get());
}

TEST_CASE("theta integrals") {
  const QuadratureConfig cfg;
  const QuadratureResult one = integrate_theta([](double) { return Complex(1.0); }, cfg);
  CHECK(rel_err(one.value, pi) < 1e-14);
  CHECK(one.converged);
  CHECK(one.est_error <= std::max(cfg.rel_tol * pi, cfg.abs_tol));
  CHECK(std::abs(integrate_theta([](double t) { return Complex(std::cos(t)); }, cfg).value) < 1e-14);
  CHECK(rel_err(integrate_theta([](double t) { return Complex(std::cos(t) * std::cos(t)); }, cfg).value, pi / 2) <
        1e-14);

  QuadratureConfig tight;
  tight.max_refinements = 1;
  CHECK_THROWS_AS(integrate_theta([](double t) { return Complex(std::sqrt(std::abs(t - 1.0))); }, tight),
                  NonConvergence);
  QuadratureConfig bad;
  bad.window_growth = 1.0;
  CHECK_THROWS_AS(integrate_theta([](double) { return Complex(1.0); }, bad), DomainError);
}

TEST_CASE("line integrals") {
  const QuadratureConfig cfg;
  const auto g = integrate_line_even_window([](double t) { return Complex(std::exp(-t * t)); }, cfg);
  CHECK(rel_err(g.value, std::sqrt(pi)) < 1e-14);
  CHECK(g.window > 5.0);
  for (double alpha : {0.8, 1.0, 2.0}) {
    const auto r = integrate_line_even_window(
        LineIntegrand([&](double t) { return LogValue{-t * t + std::log(std::cosh(alpha * t)), 0.0}; }), cfg);
    CHECK(rel_err(r.value, std::sqrt(pi) * std::exp(alpha * alpha / 4)) < 1e-13);
  }
  const auto odd = integrate_line_even_window([](double t) { return Complex(t * std::exp(-t * t)); }, cfg);
  CHECK(std::abs(odd.value) < 1e-14);
  // conjugate-symmetric integrand: the imaginary part cancels
  const auto sym = integrate_line_even_window(
      [](double t) { return Complex(std::exp(-t * t), std::sin(t) * std::exp(-t * t)); }, cfg);
  CHECK(std::abs(sym.value.imag()) < 10 * sym.est_error);
}

TEST_CASE("window estimation") {
  const QuadratureConfig cfg;
  const double t = estimate_theta_growth_window([](double x) { return -x * x; }, cfg);
  CHECK(t >= std::sqrt(16 * std::log(10.0)));
  CHECK(t <= 6.1);
  CHECK(estimate_theta_growth_window([](double) { return -1000.0; }, cfg) == 1.0);
  try {
    estimate_theta_growth_window([](double x) { return x; }, cfg);
    FAIL("expected WindowFailure");
  } catch (const WindowFailure& e) {
    CHECK(e.probes().size() > 5);
    CHECK(std::string(e.what()).find("T=1:") != std::string::npos);
  }
  CHECK_THROWS_AS(estimate_theta_growth_window([](double) { return std::nan(""); }, cfg), WindowFailure);
}
