#include "matchpd/certificates.hpp"

#include <stdexcept>

namespace matchpd {

std::string to_string(CertificateFailure f) {
  switch (f) {
    case CertificateFailure::NotMatching: return "not-matching";
    case CertificateFailure::DualInfeasible: return "dual-infeasible";
    case CertificateFailure::UntightMatchedEdge: return "untight-matched-edge";
    case CertificateFailure::UnmatchedNonzeroVertex: return "unmatched-nonzero-vertex";
    case CertificateFailure::NotPerfect: return "not-perfect";
  }
  return "?";
}

bool is_feasible_potential(const BipartiteInstance& inst, const Potential& pi) {
  for (const Rational& v : pi.left)
    if (v < Rational(0)) return false;
  for (const Rational& v : pi.right)
    if (v < Rational(0)) return false;
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (pi.left[e.left] + pi.right[e.right] < inst.weight(i)) return false;
  }
  return true;
}

bool is_mp_feasible(const BipartiteInstance& inst, const Potential& pi) {
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (pi.left[e.left] + pi.right[e.right] > inst.weight(i)) return false;
  }
  return true;
}

namespace {

void check_shapes(const BipartiteInstance& inst, const Potential& pi) {
  if ((int)pi.left.size() != inst.n_left() || (int)pi.right.size() != inst.n_right())
    throw std::invalid_argument("potential not total on V");
}

// first offending edge for a non-matching, in sorted edge order
std::optional<std::variant<Edge, VertexId>> matching_violation(const BipartiteInstance& inst,
                                                               const Matching& m) {
  std::vector<bool> used_left(inst.n_left(), false), used_right(inst.n_right(), false);
  for (const Edge& e : m.edges) {
    if (e.left < 0 || e.left >= inst.n_left() || e.right < 0 || e.right >= inst.n_right())
      return e;
    if (!inst.has_edge(e)) return e;
    if (used_left[e.left] || used_right[e.right]) return e;
    used_left[e.left] = true;
    used_right[e.right] = true;
  }
  return std::nullopt;
}

}  // namespace

CertificateReport check_max_weight_certificate(const BipartiteInstance& inst, const Matching& m,
                                               const Potential& pi) {
  check_shapes(inst, pi);
  if (auto w = matching_violation(inst, m))
    return CertificateReport::fail(CertificateFailure::NotMatching, *w);

  for (int i = 0; i < inst.n_left(); ++i)
    if (pi.left[i] < Rational(0))
      return CertificateReport::fail(CertificateFailure::DualInfeasible, left_vertex(i));
  for (int i = 0; i < inst.n_right(); ++i)
    if (pi.right[i] < Rational(0))
      return CertificateReport::fail(CertificateFailure::DualInfeasible, right_vertex(i));
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (pi.left[e.left] + pi.right[e.right] < inst.weight(i))
      return CertificateReport::fail(CertificateFailure::DualInfeasible, e);
  }

  for (const Edge& e : m.edges)
    if (!slack(inst, pi, e).is_zero())
      return CertificateReport::fail(CertificateFailure::UntightMatchedEdge, e);

  std::vector<bool> matched_left(inst.n_left(), false), matched_right(inst.n_right(), false);
  for (const Edge& e : m.edges) {
    matched_left[e.left] = true;
    matched_right[e.right] = true;
  }
  for (int i = 0; i < inst.n_left(); ++i)
    if (!pi.left[i].is_zero() && !matched_left[i])
      return CertificateReport::fail(CertificateFailure::UnmatchedNonzeroVertex, left_vertex(i));
  for (int i = 0; i < inst.n_right(); ++i)
    if (!pi.right[i].is_zero() && !matched_right[i])
      return CertificateReport::fail(CertificateFailure::UnmatchedNonzeroVertex, right_vertex(i));

  return CertificateReport::ok();
}

CertificateReport check_min_perfect_certificate(const BipartiteInstance& inst, const Matching& m,
                                                const Potential& pi) {
  check_shapes(inst, pi);
  if (auto w = matching_violation(inst, m))
    return CertificateReport::fail(CertificateFailure::NotMatching, *w);

  std::vector<bool> matched_left(inst.n_left(), false), matched_right(inst.n_right(), false);
  for (const Edge& e : m.edges) {
    matched_left[e.left] = true;
    matched_right[e.right] = true;
  }
  for (int i = 0; i < inst.n_left(); ++i)
    if (!matched_left[i])
      return CertificateReport::fail(CertificateFailure::NotPerfect, left_vertex(i));
  for (int i = 0; i < inst.n_right(); ++i)
    if (!matched_right[i])
      return CertificateReport::fail(CertificateFailure::NotPerfect, right_vertex(i));

  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (pi.left[e.left] + pi.right[e.right] > inst.weight(i))
      return CertificateReport::fail(CertificateFailure::DualInfeasible, e);
  }

  for (const Edge& e : m.edges)
    if (!slack(inst, pi, e).is_zero())
      return CertificateReport::fail(CertificateFailure::UntightMatchedEdge, e);

  // complementary slackness consequence of a true verdict
  if (m.weight(inst) != pi.total())
    throw std::logic_error("min-perfect certificate: w(M) != pi(V) despite tightness");

  return CertificateReport::ok();
}

bool check_unbounded_ray(const BipartiteInstance& inst, const Potential& pi, const Potential& d) {
  check_shapes(inst, pi);
  check_shapes(inst, d);
  if (!is_mp_feasible(inst, pi)) return false;
  for (const Edge& e : inst.edges())
    if (d.left[e.left] + d.right[e.right] > Rational(0)) return false;
  return d.total() > Rational(0);
}

}  // namespace matchpd
