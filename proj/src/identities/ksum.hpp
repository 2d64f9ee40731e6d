#pragma once

// Outer series shared by the fractional theorems:
//   sum_k c_k  phi[q^{-k}, A; B; q, q],
//   c_k = x^{mu+k} (a/x;q)_{mu+k} / (a^k (q;q)_{mu+k}).

#include <span>
#include <vector>

#include "qaw/qcore.hpp"

namespace qaw::detail {

class FractionalKSum {
 public:
  FractionalKSum(double x, double a, double mu, const QContext& ctx);

  struct Result {
    Complex value;
    int k_terms = 0;
  };

  /// Zero parameters are dropped from both lists before summing (they
  /// contribute unit factors), so a zeroed pair gives the shorter series.
  /// Throws KSumDivergence when terms grow for 20 consecutive k.
  Result sum(std::span<const Complex> numer, std::span<const Complex> denom);

 private:
  double log_c(int k);

  double x_;
  double a_;
  double mu_;
  QContext ctx_;
  std::vector<double> log_c_;
  int k_hint_ = 32;
};

inline constexpr int kGrowthLimit = 20;

/// x^mu (a/x;q)_mu / (q;q)_mu, the fractional integral of 1 up to (1-q)^mu.
double fractional_weight(double x, double a, double mu, const QContext& ctx);

}  // namespace qaw::detail
