#pragma once

// Quadrature for the three integral families: smooth integrands on [0, pi]
// and conjugate-symmetric, theta-growth integrands on the real line.

#include <functional>
#include <memory>
#include <vector>

#include "qaw/qcore.hpp"

namespace qaw {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_refinements = 20;
  int initial_nodes = 64;
  double window_growth = 1.5;
  double window_tail_tol = 1e-16;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double est_error = 0.0;
  int nodes_used = 0;
  double window = 0.0;  ///< half-width T of [-T, T]; 0 for the theta integral
  bool converged = false;
};

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rules are generated by Newton iteration on P_n and cached per n.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n);

/// Points per composite panel.
inline constexpr int kPanelOrder = 16;

using LineIntegrand = std::function<LogValue(double)>;
using LogMagnitude = std::function<double(double)>;

/// Composite Gauss-Legendre on [0, pi]; the panel count doubles until two
/// successive values agree to max(rel_tol |I|, abs_tol).
QuadratureResult integrate_theta(const std::function<Complex(double)>& f, const QuadratureConfig& cfg);

/// Integral over the real line of an integrand with f(-t) = conj f(t). The
/// window [-T, T] is chosen from the log-magnitude of the actual integrand;
/// est_error includes |Im I|, which is zero in exact arithmetic.
QuadratureResult integrate_line_even_window(const LineIntegrand& f, const QuadratureConfig& cfg);
QuadratureResult integrate_line_even_window(const std::function<Complex(double)>& f,
                                            const QuadratureConfig& cfg);

/// Smallest T (geometric probes 1, g, g^2, ... up to 50, then bisection of
/// the bracketing interval) with log_magnitude(T) < log(window_tail_tol).
/// Throws WindowFailure listing every probe when no such T exists.
double estimate_theta_growth_window(const LogMagnitude& log_magnitude, const QuadratureConfig& cfg);

}  // namespace qaw
