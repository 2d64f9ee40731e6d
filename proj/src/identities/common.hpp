#pragma once

#include <chrono>
#include <string>
#include <utility>

#include "qaw/errors.hpp"
#include "qaw/identities.hpp"

namespace qaw::detail {

/// Times `body`, which returns {lhs, rhs, lhs_diag, rhs_diag}, and scores the report.
template <class Body>
IdentityReport timed_check(std::string name, ParamList params, double tol, Criterion crit, Body&& body) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  IdentityReport r;
  r.identity_name = std::move(name);
  r.params = std::move(params);
  r.tolerance = tol;
  r.criterion = crit;
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.wall_time = std::chrono::steady_clock::now() - start;
  score(r);
  return r;
}

inline SideDiagnostics quad_diag(std::string route, const QuadratureResult& q, int k_terms = 0) {
  SideDiagnostics d;
  d.route = std::move(route);
  d.nodes = q.nodes_used;
  d.window = q.window;
  d.est_error = q.est_error;
  d.converged = q.converged;
  d.k_terms = k_terms;
  return d;
}

inline SideDiagnostics closed_diag(std::string route, int k_terms = 0) {
  SideDiagnostics d;
  d.route = std::move(route);
  d.k_terms = k_terms;
  return d;
}

}  // namespace qaw::detail
