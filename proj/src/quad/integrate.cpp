#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qaw/errors.hpp"
#include "qaw/quad.hpp"

namespace qaw {

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0) || !(window_tail_tol > 0.0))
    throw DomainError("quadrature tolerances must be positive");
  if (max_refinements < 1) throw DomainError("max_refinements must be at least 1");
  if (initial_nodes < 1) throw DomainError("initial_nodes must be positive");
  if (!(window_growth > 1.0)) throw DomainError("window_growth must exceed 1");
}

namespace {

constexpr double kMaxWindow = 50.0;

struct PanelSum {
  Complex value;
  double abs_sum = 0.0;  // sum of w |f|, for the rounding floor
};

// Composite rule with `panels` equal panels of kPanelOrder points on [lo, hi].
// Panels are summed left to right so the reduction order is fixed.
template <class F>
PanelSum composite(const F& f, double lo, double hi, int panels) {
  const auto rule = gauss_legendre(kPanelOrder);
  const double width = (hi - lo) / panels;
  PanelSum out;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    Complex acc(0.0);
    double abs_acc = 0.0;
    for (int i = 0; i < kPanelOrder; ++i) {
      const Complex v = f(mid + half * rule->nodes[i]);
      acc += rule->weights[i] * v;
      abs_acc += rule->weights[i] * std::abs(v);
    }
    out.value += half * acc;
    out.abs_sum += half * abs_acc;
  }
  return out;
}

// Doubling loop shared by both integrators. `extra` adds problem-specific
// error terms (tail, imaginary part) to the estimate.
template <class F, class Extra>
QuadratureResult refine(const F& f, double lo, double hi, const QuadratureConfig& cfg, const Extra& extra) {
  int panels = std::max(1, cfg.initial_nodes / kPanelOrder);
  PanelSum prev = composite(f, lo, hi, panels);
  int nodes = panels * kPanelOrder;
  for (int r = 1; r <= cfg.max_refinements; ++r) {
    panels *= 2;
    const PanelSum cur = composite(f, lo, hi, panels);
    nodes += panels * kPanelOrder;
    const double floor = 16.0 * std::numeric_limits<double>::epsilon() * cur.abs_sum;
    const double est = std::abs(cur.value - prev.value) + floor + extra(cur.value);
    const double target = std::max(cfg.rel_tol * std::abs(cur.value), cfg.abs_tol);
    if (est <= target) return {cur.value, est, nodes, 0.0, true};
    prev = cur;
  }
  std::ostringstream os;
  os << "quadrature did not converge after " << cfg.max_refinements << " refinements";
  throw NonConvergence(os.str(), prev.value, std::abs(prev.value), nodes);
}

}  // namespace

QuadratureResult integrate_theta(const std::function<Complex(double)>& f, const QuadratureConfig& cfg) {
  cfg.validate();
  return refine(f, 0.0, std::numbers::pi, cfg, [](Complex) { return 0.0; });
}

double estimate_theta_growth_window(const LogMagnitude& log_magnitude, const QuadratureConfig& cfg) {
  cfg.validate();
  const double target = std::log(cfg.window_tail_tol);
  std::vector<std::pair<double, double>> probes;
  auto fail = [&](const std::string& why) {
    std::ostringstream os;
    os << "window selection failed: " << why << "; probed log|f|:";
    for (const auto& [t, l] : probes) os << " T=" << t << ":" << l;
    throw WindowFailure(os.str(), probes);
  };

  double prev = 0.0;
  for (double t = 1.0;; t = std::min(t * cfg.window_growth, kMaxWindow)) {
    const double l = log_magnitude(t);
    probes.emplace_back(t, l);
    if (std::isnan(l) || l == std::numeric_limits<double>::infinity()) fail("log-magnitude not finite");
    if (l < target) {
      if (probes.size() == 1) return t;
      // bisect the bracket [prev, t] down to 0.1% relative width
      double lo = prev;
      double hi = t;
      while (hi - lo > 1e-3 * hi) {
        const double mid = 0.5 * (lo + hi);
        const double lm = log_magnitude(mid);
        if (lm < target)
          hi = mid;
        else
          lo = mid;
      }
      return hi;
    }
    if (t >= kMaxWindow) fail("integrand does not decay by T = 50");
    prev = t;
  }
}

QuadratureResult integrate_line_even_window(const LineIntegrand& f, const QuadratureConfig& cfg) {
  cfg.validate();
  auto log_mag = [&](double t) {
    const double l = std::max(f(t).log_abs, f(-t).log_abs);
    return l + std::log(t);
  };
  const double window = estimate_theta_growth_window(log_mag, cfg);
  const double tail = 2.0 * std::exp(log_mag(window));
  auto value = [&](double t) { return f(t).to_complex(); };
  QuadratureResult r =
      refine(value, -window, window, cfg, [tail](Complex v) { return tail + std::abs(v.imag()); });
  r.window = window;
  return r;
}

QuadratureResult integrate_line_even_window(const std::function<Complex(double)>& f,
                                            const QuadratureConfig& cfg) {
  return integrate_line_even_window(LineIntegrand([&](double t) { return LogValue::from(f(t)); }), cfg);
}

}  // namespace qaw
