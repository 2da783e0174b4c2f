#pragma once

#include <optional>
#include <string>
#include <variant>

#include "matchpd/graph.hpp"

namespace matchpd {

// Independent optimality checkers. Everything here re-derives its verdict
// from slack arithmetic on the raw instance and never calls solver code.

enum class CertificateFailure {
  NotMatching,
  DualInfeasible,
  UntightMatchedEdge,
  UnmatchedNonzeroVertex,
  NotPerfect,
};

std::string to_string(CertificateFailure f);

struct CertificateReport {
  bool verdict = false;
  std::optional<CertificateFailure> failed_condition;
  std::optional<std::variant<Edge, VertexId>> witness;

  static CertificateReport ok() { return {true, std::nullopt, std::nullopt}; }
  static CertificateReport fail(CertificateFailure f, std::variant<Edge, VertexId> w) {
    return {false, f, w};
  }
};

// Max-weight optimality: M a matching, pi a feasible potential
// (pi >= 0 and pi(u)+pi(v) >= w on every edge), matched edges tight,
// and every vertex with nonzero potential matched.
CertificateReport check_max_weight_certificate(const BipartiteInstance& inst, const Matching& m,
                                               const Potential& pi);

// Min-weight-perfect optimality: M a perfect matching, pi mp-feasible
// (pi(u)+pi(v) <= w on every edge, sign-free), matched edges tight.
// A true verdict also asserts w(M) = pi(V).
CertificateReport check_min_perfect_certificate(const BipartiteInstance& inst, const Matching& m,
                                                const Potential& pi);

// Dual ray: pi mp-feasible, d(u)+d(v) <= 0 on every edge, and sum(d) > 0,
// so pi + t*d stays mp-feasible with unbounded objective.
bool check_unbounded_ray(const BipartiteInstance& inst, const Potential& pi, const Potential& d);

// shared feasibility predicates
bool is_feasible_potential(const BipartiteInstance& inst, const Potential& pi);   // max setting
bool is_mp_feasible(const BipartiteInstance& inst, const Potential& pi);          // min setting

}  // namespace matchpd
