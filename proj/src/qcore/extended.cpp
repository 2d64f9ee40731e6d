#include "qaw/errors.hpp"
#include "qaw/extended.hpp"

namespace qaw {

ExtComplex q_pochhammer_infinite_ext(const ExtComplex& a, const ExtReal& q) {
  if (!(q > 0 && q < 1)) throw DomainError("base q must satisfy 0 < q < 1");
  // |a q^k|^2 below 10^{-2 digits}
  const ExtReal cutoff = pow(ExtReal(10), -2 * static_cast<int>(kExtendedDigits));
  const ExtComplex one(ExtReal(1));
  ExtComplex p = one;
  ExtComplex term = a;
  const ExtComplex qc(q);
  for (int k = 0; term.norm() >= cutoff; ++k) {
    if (k > 1'000'000) throw NonConvergence("extended q-Pochhammer did not converge", {}, 0.0, k);
    p = p * (one - term);
    term = term * qc;
  }
  return p;
}

}  // namespace qaw
