#include <limits>
#include <random>

#include "qaw/errors.hpp"
#include "qaw/identities.hpp"

namespace qaw {

namespace {

Complex draw(const ParamSource& src, std::mt19937_64& rng) {
  switch (src.kind) {
    case ParamSource::Kind::fixed:
      return src.fixed;
    case ParamSource::Kind::range:
      return std::uniform_real_distribution<double>(src.lo, src.hi)(rng);
    case ParamSource::Kind::choice:
      return src.choices[std::uniform_int_distribution<std::size_t>(0, src.choices.size() - 1)(rng)];
  }
  return src.fixed;
}

IdentityReport unscored(const std::string& name, const ParamMap& values, double tol, CheckStatus status,
                        const std::string& why) {
  IdentityReport r;
  r.identity_name = name;
  for (const auto& [k, v] : values) r.params.push_back({k, v});
  r.tolerance = tol;
  r.status = status;
  r.passed = false;
  r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
  r.lhs = r.rhs = Complex(std::numeric_limits<double>::quiet_NaN(), 0.0);
  r.message = why;
  return r;
}

}  // namespace

std::vector<IdentityReport> run_suite(const SuiteSpec& suite, const CheckSettings& settings,
                                      const std::function<bool()>& stop_requested) {
  for (const SuiteCheck& c : suite.checks) {
    if (!find_check(c.identity))
      throw UsageError("unknown identity '" + c.identity + "'; registry: " + registry_names());
    if (c.draws < 1) throw UsageError("draws must be at least 1 for '" + c.identity + "'");
    for (const auto& [name, src] : c.params) {
      if (src.kind == ParamSource::Kind::choice && src.choices.empty())
        throw UsageError("empty choice list for parameter '" + name + "'");
      if (src.kind == ParamSource::Kind::range && !(src.lo <= src.hi))
        throw UsageError("bad range for parameter '" + name + "'");
    }
  }

  std::mt19937_64 rng(suite.seed);
  std::vector<ParamMap> draws;
  for (const SuiteCheck& c : suite.checks)
    for (int d = 0; d < c.draws; ++d) {
      ParamMap m;
      for (const auto& [name, src] : c.params) m.emplace(name, draw(src, rng));
      draws.push_back(std::move(m));
    }

  std::vector<IdentityReport> out;
  std::size_t i = 0;
  for (const SuiteCheck& c : suite.checks) {
    const CheckEntry& entry = *find_check(c.identity);
    const double tol = c.tolerance.value_or(entry.default_tol);
    for (int d = 0; d < c.draws; ++d, ++i) {
      if (stop_requested && stop_requested()) return out;
      const ParamMap& values = draws[i];
      try {
        out.push_back(run_check(entry, values, tol, settings));
      } catch (const DomainError& e) {
        out.push_back(unscored(entry.name, values, tol, CheckStatus::skipped, e.what()));
      } catch (const NumericalError& e) {
        out.push_back(unscored(entry.name, values, tol, CheckStatus::diverged, e.what()));
      }
    }
  }
  return out;
}

}  // namespace qaw
