#pragma once

// Executable forms of the fractional generating identity, its three-term
// lemma and Cauchy-operator lemma, and the Askey-Wilson, reversal and
// Atakishiyev integrals together with their fractional generalisations.
//
// Every check computes its two sides through disjoint routes that share only
// the qcore scalar primitives: operator or quadrature on the left, closed
// products or the k-sum on the right.

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qaw/qcore.hpp"
#include "qaw/quad.hpp"

namespace qaw {

struct NamedValue {
  std::string name;
  Complex value;
};
using ParamList = std::vector<NamedValue>;
using ParamMap = std::map<std::string, Complex, std::less<>>;

/// Series policy and quadrature configuration used by a check. The base q of
/// `ctx` is replaced by the one in the parameter bundle.
struct CheckSettings {
  QContext ctx;
  QuadratureConfig quad;
};

/// Default tolerances per identity family.
inline constexpr double kTolGenerating = 1e-8;
inline constexpr double kTolAskeyWilson = 1e-6;
inline constexpr double kTolLine = 1e-5;
inline constexpr double kTolLemma = 1e-12;
inline constexpr double kTolCauchy = 1e-10;

/// Parameters of the fractional generating identity and its three-term lemma:
///   I_{q,a}^mu { (bxz, xt, xru;q)_inf / (xs, xz, xu;q)_inf }.
struct GeneratingParams {
  double a = 0.2;
  Complex b, r, s, t, u, z;
  double x = 0.6;
  double mu = 1.0;
  double q = 0.5;

  /// 0 < a < x < 1, mu > 0, max(|at|, |az|, |aru|) < 1
  void validate() const;
  ParamList to_params() const;
};

struct AWParams {
  Complex a, b, c, d;
  double x = 0.6;
  double mu = 1.0;
  double q = 0.5;

  void validate() const;             ///< max(|a|,|b|,|c|,|d|) < 1
  void validate_fractional() const;  ///< plus a real and 0 < a < x < 1
  ParamList to_params(bool fractional) const;
};

struct ReversalParams {
  Complex a, b, c, d;
  double x = 0.6;
  double mu = 1.0;
  double q = 0.5;

  void validate() const;  ///< |q a b c d| < 1
  void validate_fractional() const;
  ParamList to_params(bool fractional) const;
};

/// q is tied to the Gaussian scale: q = exp(-2 alpha_g^2).
struct AtakishiyevParams {
  Complex a, b, c, d;
  double x = 0.6;
  double mu = 1.0;
  double alpha_g = 1.0;

  double q() const;
  void validate() const;  ///< alpha_g != 0, |abcd/q^3| < 1
  void validate_fractional() const;
  ParamList to_params(bool fractional) const;
};

/// T(a, b D_c) applied to 1/(ct;q)_inf.
struct CauchyParams {
  Complex a, b, c, t;
  double q = 0.5;
  int n_max = 40;

  void validate() const;  ///< max(|bt|, |ct|) < 1, c != 0
  ParamList to_params() const;
};

struct SideDiagnostics {
  std::string route;
  int terms = 0;    ///< series terms (Jackson sum, products)
  int k_terms = 0;  ///< longest outer k-sum used
  int nodes = 0;
  double window = 0.0;
  double est_error = 0.0;
  bool converged = true;
};

enum class CheckStatus { passed, failed, skipped, diverged };
enum class Criterion { relative, absolute };

std::string_view to_string(CheckStatus s);

struct IdentityReport {
  std::string identity_name;
  ParamList params;
  Complex lhs;
  Complex rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  Criterion criterion = Criterion::relative;
  SideDiagnostics lhs_diag;
  SideDiagnostics rhs_diag;
  std::chrono::duration<double> wall_time{};
  bool passed = false;
  CheckStatus status = CheckStatus::failed;
  std::string message;  ///< reason for skipped/diverged reports
};

/// Fills abs_err, rel_err = abs_err / max(|lhs|, |rhs|, tiny) and passed.
void score(IdentityReport& report);

// --- fractional generating family -------------------------------------------

/// (s-u) X(a,b,z,t,r,u,s) against its three shifted terms.
/// Scored on the absolute residual.
IdentityReport check_lemma_three_term(const GeneratingParams& p, double tol = kTolLemma,
                                      const CheckSettings& settings = {});
IdentityReport check_theorem_fractional_generating(const GeneratingParams& p, double tol = kTolGenerating,
                                                   const CheckSettings& settings = {});
/// The r = u = 0 specialisation with a 3-phi-2 (r and u are ignored).
IdentityReport check_generating_3phi2(const GeneratingParams& p, double tol = kTolGenerating,
                              const CheckSettings& settings = {});
/// Operator expansion at n_max in extended precision against the closed form.
IdentityReport check_cauchy_reciprocal(const CauchyParams& p, double tol = kTolCauchy,
                                       const CheckSettings& settings = {});

// --- integrals on [0, pi] ---------------------------------------------------

IdentityReport check_askey_wilson(const AWParams& p, double tol = kTolAskeyWilson,
                                  const CheckSettings& settings = {});
IdentityReport check_fractional_aw(const AWParams& p, double tol = kTolAskeyWilson,
                                   const CheckSettings& settings = {});
/// Three-parameter version (d ignored) with a 3-phi-2.
IdentityReport check_fractional_aw_corollary(const AWParams& p, double tol = kTolAskeyWilson,
                                             const CheckSettings& settings = {});

// --- integrals over the real line -------------------------------------------

IdentityReport check_reversal_aw(const ReversalParams& p, double tol = kTolLine,
                                 const CheckSettings& settings = {});
IdentityReport check_fractional_reversal_aw(const ReversalParams& p, double tol = kTolLine,
                                            const CheckSettings& settings = {});
IdentityReport check_fractional_reversal_corollary(const ReversalParams& p, double tol = kTolLine,
                                                   const CheckSettings& settings = {});

IdentityReport check_atakishiyev(const AtakishiyevParams& p, double tol = kTolLine,
                                 const CheckSettings& settings = {});
/// The Gaussian factor is e^{-t^2} in the integration variable t.
IdentityReport check_fractional_atakishiyev(const AtakishiyevParams& p, double tol = kTolLine,
                                            const CheckSettings& settings = {});
IdentityReport check_fractional_atakishiyev_corollary(const AtakishiyevParams& p, double tol = kTolLine,
                                                      const CheckSettings& settings = {});

// --- registry and suites ----------------------------------------------------

struct ParamDefault {
  std::string name;
  bool required = false;
  Complex fallback;
};

struct CheckEntry {
  std::string name;
  std::string summary;
  double default_tol;
  std::vector<ParamDefault> params;
  IdentityReport (*run)(const ParamMap&, double tol, const CheckSettings&);
};

std::span<const CheckEntry> check_registry();
/// nullptr when the name is unknown.
const CheckEntry* find_check(std::string_view name);
/// Comma-separated registry names, for error messages.
std::string registry_names();

/// Runs a registry entry on named values, filling unset parameters from the
/// entry defaults. Throws UsageError on unknown names or missing values.
IdentityReport run_check(const CheckEntry& entry, const ParamMap& values, double tol,
                         const CheckSettings& settings = {});

/// How one suite parameter is produced for each draw.
struct ParamSource {
  enum class Kind { fixed, range, choice } kind = Kind::fixed;
  Complex fixed;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<Complex> choices;
};

struct SuiteCheck {
  std::string identity;
  std::map<std::string, ParamSource> params;
  std::optional<double> tolerance;
  int draws = 1;
};

struct SuiteSpec {
  std::uint64_t seed = 0;
  std::vector<SuiteCheck> checks;
  std::string output;
};

/// Draws parameters with a single mt19937_64 seeded from `seed`, in suite
/// order and sorted parameter-name order, then runs every draw. Domain
/// violations become skipped reports and numerical failures diverged ones;
/// nothing is thrown except UsageError for unknown identities. When
/// `stop_requested` returns true the reports gathered so far are returned.
std::vector<IdentityReport> run_suite(const SuiteSpec& suite, const CheckSettings& settings = {},
                                      const std::function<bool()>& stop_requested = {});

}  // namespace qaw
