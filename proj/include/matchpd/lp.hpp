#pragma once

#include <vector>

#include "matchpd/graph.hpp"
#include "matchpd/rational.hpp"

namespace matchpd {

// Dense rational vectors/matrices. This layer exists as an independent
// check on the graph algorithms, so it stays deliberately matrix-literal:
// no sparsity, no shortcuts.
struct DenseVector {
  std::vector<Rational> entries;

  DenseVector() = default;
  explicit DenseVector(std::vector<Rational> es) : entries(std::move(es)) {}
  explicit DenseVector(size_t n) : entries(n) {}

  size_t size() const { return entries.size(); }
  Rational& operator[](size_t i) { return entries[i]; }
  const Rational& operator[](size_t i) const { return entries[i]; }
  friend bool operator==(const DenseVector&, const DenseVector&) = default;
};

struct DenseMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // row-major

  DenseMatrix() = default;
  DenseMatrix(int r, int c) : rows(r), cols(c), entries((size_t)r * c) {}

  Rational& at(int r, int c) { return entries[(size_t)r * cols + c]; }
  const Rational& at(int r, int c) const { return entries[(size_t)r * cols + c]; }

  DenseVector multiply(const DenseVector& x) const;            // A x
  DenseVector multiply_transposed(const DenseVector& y) const;  // A^T y
};

Rational dot(const DenseVector& a, const DenseVector& b);

enum class LpForm {
  MaxPacking,  // max c^T x  s.t. A x <= b, x >= 0;  dual: min b^T y, A^T y >= c, y >= 0
  MinPerfect,  // min w^T x  s.t. A x  = 1, x >= 0;  dual: max 1^T y, A^T y <= w (free sign)
};

enum class LpSide { Primal, Dual };

struct LpPair {
  LpForm form;
  DenseMatrix a;
  DenseVector objective;  // c for MaxPacking, w for MinPerfect
  DenseVector rhs;        // b (all-ones for matching LPs)
};

// incidence matrix: rows = vertices (left block then right), cols = edges
DenseMatrix incidence_matrix(const BipartiteInstance& inst);

// matching LPs over the incidence matrix with all-ones right-hand side
LpPair max_packing_lp(const BipartiteInstance& inst);
LpPair min_perfect_lp(const BipartiteInstance& inst);

// 0/1 indicator of M in edge-list order; rejects non-matchings
DenseVector matching_to_primal(const BipartiteInstance& inst, const Matching& m);

// potential values in vertex order (left block then right)
DenseVector potential_to_dual(const BipartiteInstance& inst, const Potential& pi);

bool check_feasible(const LpPair& lp, LpSide side, const DenseVector& v);

// Dual objective minus primal objective for MaxPacking, primal minus dual for
// MinPerfect; weak duality makes it nonnegative. Rejects infeasible inputs.
Rational duality_gap(const LpPair& lp, const DenseVector& x, const DenseVector& y);

// Complementary slackness with approximation factor delta in [0, 1).
// MaxPacking: ((1-delta) A x - b)^T y = 0  and  (A^T y - c)^T x = 0.
// MinPerfect: (A^T y - w)^T x = 0 (only delta = 0 is meaningful here).
// When true with delta = 0, equal objectives are asserted internally.
bool cs_check(const LpPair& lp, const DenseVector& x, const DenseVector& y,
              const Rational& delta);

}  // namespace matchpd
