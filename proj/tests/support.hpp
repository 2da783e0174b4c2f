#pragma once

// Shared fixtures and small generators for the test suites.

#include <vector>

#include "matchpd/graph.hpp"
#include "matchpd/rng.hpp"

namespace matchpd::test {

// The running 2x2 example: w(l0r0)=1, w(l0r1)=2, w(l1r0)=2, w(l1r1)=4.
// Max-weight matching {l0r0, l1r1} of weight 5; min-weight perfect
// matching {l0r1, l1r0} of weight 4.
inline BipartiteInstance g1() {
  return BipartiteInstance(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                           {Rational(1), Rational(2), Rational(2), Rational(4)});
}

inline Potential make_potential(std::vector<long long> left, std::vector<long long> right) {
  Potential pi((int)left.size(), (int)right.size());
  for (size_t i = 0; i < left.size(); ++i) pi.left[i] = Rational(left[i]);
  for (size_t i = 0; i < right.size(); ++i) pi.right[i] = Rational(right[i]);
  return pi;
}

inline VertexSet make_set(int n_left, int n_right, std::vector<VertexId> vs) {
  VertexSet s(n_left, n_right);
  for (const VertexId& v : vs) s.insert(v);
  return s;
}

// random bipartite instance with integer weights in [w_lo, w_hi] and the
// given edge probability (percent)
inline BipartiteInstance random_instance(Rng& rng, int n_left, int n_right, int edge_pct,
                                         int w_lo, int w_hi) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int l = 0; l < n_left; ++l)
    for (int r = 0; r < n_right; ++r)
      if (rng.uniform_int(0, 99) < edge_pct) {
        edges.push_back({l, r});
        weights.push_back(Rational(rng.uniform_int(w_lo, w_hi)));
      }
  return BipartiteInstance(n_left, n_right, std::move(edges), std::move(weights));
}

inline BipartiteInstance random_complete(Rng& rng, int n, int w_lo, int w_hi) {
  std::vector<Edge> edges;
  std::vector<Rational> weights;
  for (int l = 0; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      edges.push_back({l, r});
      weights.push_back(Rational(rng.uniform_int(w_lo, w_hi)));
    }
  return BipartiteInstance(n, n, std::move(edges), std::move(weights));
}

// random feasible potential for the max-weight setting: cover each edge from
// the left side, then add nonnegative noise
inline Potential random_feasible_potential(Rng& rng, const BipartiteInstance& inst) {
  Potential pi(inst.n_left(), inst.n_right());
  for (int r = 0; r < inst.n_right(); ++r) pi.right[r] = Rational(rng.uniform_int(0, 5));
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    Rational need = inst.weight(i) - pi.right[e.right];
    if (need > pi.left[e.left]) pi.left[e.left] = need;
  }
  for (int l = 0; l < inst.n_left(); ++l) pi.left[l] += Rational(rng.uniform_int(0, 3));
  return pi;
}

}  // namespace matchpd::test
