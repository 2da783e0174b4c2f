#pragma once

#include <functional>
#include <optional>

#include "matchpd/graph.hpp"

namespace matchpd {

// Naive primal-dual max-weight matching: keep a feasible potential (an upper
// bound pi(V) on any matching weight), repeatedly look for a tight matching
// covering all nonzero vertices, and lower the bound by a primal-dual
// adjustment when none exists. Exponential in the worst case; exactness and
// the certificate are the point, not speed.

struct NaiveState {
  Potential pi;
  long long iteration = 0;  // PDA count so far
};

struct NaiveResult {
  Matching matching;
  Potential final_potential;
  long long iterations = 0;  // PDAs performed
};

struct NaiveOptions {
  // re-check invariants N1 (feasibility) and N2 (alpha multiples) plus
  // monotone dual descent after every adjustment
  bool validate_invariants = false;
  // 0 = derive the default cap 10 * |V| * (max weight / alpha)
  long long iteration_cap = 0;
  // observes the state after each PDA
  std::function<void(const NaiveState&)> on_adjust;
};

// pi(v in L) = max incident weight (0 if isolated), pi(R) = 0.
// Requires nonnegative weights; the result is feasible.
Potential init_potential(const BipartiteInstance& inst);

// min over positive slacks leaving X toward vertices outside gamma_pi(X),
// unioned with the potentials on X; X must be one-sided and nonempty with
// positive potentials, which makes the result strictly positive.
Rational find_epsilon(const BipartiteInstance& inst, const Potential& pi, const VertexSet& x);

// pi' = pi - eps on X, pi + eps on gamma_pi(X) (computed before the update),
// unchanged elsewhere. Checks the adjustment-lemma premises and throws
// std::invalid_argument naming the violated one; asserts
// pi'(V) = pi(V) + (|gamma| - |X|) * eps and feasibility of pi'.
Potential pd_adjust(const BipartiteInstance& inst, const Potential& pi, const VertexSet& x,
                    const Rational& eps);

// largest rational alpha such that every weight is an integer multiple of it
// (zero for an edgeless or all-zero instance)
Rational common_weight_unit(const BipartiteInstance& inst);

NaiveResult naive_solve(const BipartiteInstance& inst, const NaiveOptions& options = {});

}  // namespace matchpd
