#pragma once

#include <optional>
#include <string>

#include "matchpd/certificates.hpp"
#include "matchpd/hungarian.hpp"
#include "matchpd/naive_pd.hpp"

namespace matchpd {

// Problem-level driver shared by the CLI and the test suites: dispatches to
// a solver, computes the reported value, and attaches an optimality
// certificate that an independent party can recheck from the instance, the
// matching and the potential alone.

enum class Algorithm { Naive, Hungarian };

std::string to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(const std::string& s);
std::optional<ProblemKind> problem_from_string(const std::string& s);

// The certificate convention per problem (documented for verifiers):
//  - maxw:        max-weight certificate on the original weights
//  - maxcard:     max-weight certificate on unit weights
//  - minwmaxcard: max-weight certificate on weights K - w with
//                 K = 2 * min(|L|,|R|) * max|w| + 1 (cardinality bonus)
//  - minperfect:  min-perfect certificate on the original weights
//  - maxwperfect: min-perfect certificate on negated weights
struct CertificateScheme {
  bool min_perfect;            // which checker applies
  std::vector<Rational> weights;  // effective weights, edge-list order
};

CertificateScheme certificate_scheme(ProblemKind problem, const BipartiteInstance& inst);

// Feasible potential for the max-weight problem, tight on M and supported on
// matched vertices, recovered from an optimal matching by solving the
// difference-constraint system with longest-path relaxation. Throws
// std::logic_error when M is not optimal (the system is then infeasible).
Potential recover_max_weight_potential(const BipartiteInstance& inst, const Matching& m);

struct SolveStats {
  long long iterations = 0;  // PDAs (naive) or augmentations (hungarian)
  long long pda_count = 0;
};

struct SolveOutcome {
  bool infeasible = false;
  Matching matching;
  Rational value;
  Potential potential;  // under the problem's certificate scheme
  CertificateReport certificate;
  SolveStats stats;
};

// value reported per problem: |M| for maxcard, sum of original weights
// otherwise
Rational solution_value(ProblemKind problem, const BipartiteInstance& inst, const Matching& m);

SolveOutcome solve_problem(ProblemKind problem, Algorithm algorithm,
                           const BipartiteInstance& inst,
                           const HungarianOptions& hungarian_options = {});

// Recomputes the certificate for an externally supplied (matching, potential)
// pair under the problem's scheme.
CertificateReport verify_solution(ProblemKind problem, const BipartiteInstance& inst,
                                  const Matching& m, const Potential& pi);

}  // namespace matchpd
