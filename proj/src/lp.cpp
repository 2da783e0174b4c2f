#include "matchpd/lp.hpp"

#include <stdexcept>

namespace matchpd {

DenseVector DenseMatrix::multiply(const DenseVector& x) const {
  if ((int)x.size() != cols) throw std::invalid_argument("matrix-vector dimension mismatch");
  DenseVector out((size_t)rows);
  for (int r = 0; r < rows; ++r) {
    Rational s;
    for (int c = 0; c < cols; ++c) {
      const Rational& a = at(r, c);
      if (!a.is_zero()) s += a * x[c];
    }
    out[r] = s;
  }
  return out;
}

DenseVector DenseMatrix::multiply_transposed(const DenseVector& y) const {
  if ((int)y.size() != rows) throw std::invalid_argument("matrix-vector dimension mismatch");
  DenseVector out((size_t)cols);
  for (int c = 0; c < cols; ++c) {
    Rational s;
    for (int r = 0; r < rows; ++r) {
      const Rational& a = at(r, c);
      if (!a.is_zero()) s += a * y[r];
    }
    out[c] = s;
  }
  return out;
}

Rational dot(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot dimension mismatch");
  Rational s;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

DenseMatrix incidence_matrix(const BipartiteInstance& inst) {
  DenseMatrix a(inst.n_vertices(), (int)inst.edges().size());
  for (int j = 0; j < (int)inst.edges().size(); ++j) {
    const Edge& e = inst.edges()[j];
    a.at(e.left, j) = Rational(1);
    a.at(inst.n_left() + e.right, j) = Rational(1);
  }
  return a;
}

namespace {

DenseVector ones(size_t n) {
  DenseVector v(n);
  for (size_t i = 0; i < n; ++i) v[i] = Rational(1);
  return v;
}

}  // namespace

LpPair max_packing_lp(const BipartiteInstance& inst) {
  return {LpForm::MaxPacking, incidence_matrix(inst), DenseVector(inst.weights()),
          ones((size_t)inst.n_vertices())};
}

LpPair min_perfect_lp(const BipartiteInstance& inst) {
  return {LpForm::MinPerfect, incidence_matrix(inst), DenseVector(inst.weights()),
          ones((size_t)inst.n_vertices())};
}

DenseVector matching_to_primal(const BipartiteInstance& inst, const Matching& m) {
  if (!is_matching(inst, m))
    throw std::invalid_argument("matching_to_primal: input is not a matching");
  DenseVector x(inst.edges().size());
  for (int j = 0; j < (int)inst.edges().size(); ++j)
    if (m.contains(inst.edges()[j])) x[j] = Rational(1);
  return x;
}

DenseVector potential_to_dual(const BipartiteInstance& inst, const Potential& pi) {
  if ((int)pi.left.size() != inst.n_left() || (int)pi.right.size() != inst.n_right())
    throw std::invalid_argument("potential_to_dual: potential not total on V");
  DenseVector y((size_t)inst.n_vertices());
  for (int i = 0; i < inst.n_left(); ++i) y[i] = pi.left[i];
  for (int i = 0; i < inst.n_right(); ++i) y[inst.n_left() + i] = pi.right[i];
  return y;
}

bool check_feasible(const LpPair& lp, LpSide side, const DenseVector& v) {
  if (side == LpSide::Primal) {
    if ((int)v.size() != lp.a.cols) throw std::invalid_argument("primal dimension mismatch");
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] < Rational(0)) return false;
    DenseVector av = lp.a.multiply(v);
    for (size_t r = 0; r < av.size(); ++r) {
      if (lp.form == LpForm::MaxPacking && av[r] > lp.rhs[r]) return false;
      if (lp.form == LpForm::MinPerfect && av[r] != lp.rhs[r]) return false;
    }
    return true;
  }
  if ((int)v.size() != lp.a.rows) throw std::invalid_argument("dual dimension mismatch");
  DenseVector atv = lp.a.multiply_transposed(v);
  if (lp.form == LpForm::MaxPacking) {
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] < Rational(0)) return false;
    for (size_t j = 0; j < atv.size(); ++j)
      if (atv[j] < lp.objective[j]) return false;
    return true;
  }
  // MinPerfect dual: A^T y <= w, no sign constraint
  for (size_t j = 0; j < atv.size(); ++j)
    if (atv[j] > lp.objective[j]) return false;
  return true;
}

Rational duality_gap(const LpPair& lp, const DenseVector& x, const DenseVector& y) {
  if (!check_feasible(lp, LpSide::Primal, x))
    throw std::invalid_argument("duality_gap: infeasible primal");
  if (!check_feasible(lp, LpSide::Dual, y))
    throw std::invalid_argument("duality_gap: infeasible dual");
  Rational primal = dot(lp.objective, x);
  if (lp.form == LpForm::MaxPacking) return dot(lp.rhs, y) - primal;
  Rational dual;
  for (const Rational& yi : y.entries) dual += yi;
  return primal - dual;
}

bool cs_check(const LpPair& lp, const DenseVector& x, const DenseVector& y,
              const Rational& delta) {
  if (delta < Rational(0) || delta >= Rational(1))
    throw std::invalid_argument("cs_check: delta outside [0,1)");
  if (lp.form == LpForm::MinPerfect && !delta.is_zero())
    throw std::invalid_argument("cs_check: scaled CS is defined for MaxPacking only");
  if (!check_feasible(lp, LpSide::Primal, x))
    throw std::invalid_argument("cs_check: infeasible primal");
  if (!check_feasible(lp, LpSide::Dual, y))
    throw std::invalid_argument("cs_check: infeasible dual");

  Rational one_minus_delta = Rational(1) - delta;
  bool ok = false;
  if (lp.form == LpForm::MaxPacking) {
    DenseVector ax = lp.a.multiply(x);
    Rational row_term;
    for (size_t r = 0; r < ax.size(); ++r)
      row_term += (one_minus_delta * ax[r] - lp.rhs[r]) * y[r];
    DenseVector aty = lp.a.multiply_transposed(y);
    Rational col_term;
    for (size_t j = 0; j < aty.size(); ++j)
      col_term += (aty[j] - lp.objective[j]) * x[j];
    col_term *= one_minus_delta;
    ok = row_term.is_zero() && col_term.is_zero();
  } else {
    DenseVector aty = lp.a.multiply_transposed(y);
    Rational term;
    for (size_t j = 0; j < aty.size(); ++j)
      term += (aty[j] - lp.objective[j]) * x[j];
    ok = term.is_zero();
  }
  if (ok && delta.is_zero()) {
    // CS with delta = 0 forces equal objectives
    if (!duality_gap(lp, x, y).is_zero())
      throw std::logic_error("cs_check: zero CS with nonzero duality gap");
  }
  return ok;
}

}  // namespace matchpd
