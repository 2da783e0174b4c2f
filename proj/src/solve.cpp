#include "matchpd/solve.hpp"

#include <stdexcept>

namespace matchpd {

std::string to_string(Algorithm a) { return a == Algorithm::Naive ? "naive" : "hungarian"; }

std::optional<Algorithm> algorithm_from_string(const std::string& s) {
  if (s == "naive") return Algorithm::Naive;
  if (s == "hungarian") return Algorithm::Hungarian;
  return std::nullopt;
}

std::optional<ProblemKind> problem_from_string(const std::string& s) {
  if (s == "maxw") return ProblemKind::MaxWeightMatching;
  if (s == "maxwperfect") return ProblemKind::MaxWeightPerfect;
  if (s == "minperfect") return ProblemKind::MinWeightPerfect;
  if (s == "maxcard") return ProblemKind::MaxCardinality;
  if (s == "minwmaxcard") return ProblemKind::MinWeightMaxCardinality;
  return std::nullopt;
}

CertificateScheme certificate_scheme(ProblemKind problem, const BipartiteInstance& inst) {
  CertificateScheme out;
  out.min_perfect =
      problem == ProblemKind::MinWeightPerfect || problem == ProblemKind::MaxWeightPerfect;
  out.weights.reserve(inst.weights().size());
  switch (problem) {
    case ProblemKind::MaxWeightMatching:
    case ProblemKind::MinWeightPerfect:
      out.weights = inst.weights();
      break;
    case ProblemKind::MaxWeightPerfect:
      for (const Rational& w : inst.weights()) out.weights.push_back(-w);
      break;
    case ProblemKind::MaxCardinality:
      out.weights.assign(inst.weights().size(), Rational(1));
      break;
    case ProblemKind::MinWeightMaxCardinality: {
      Rational w_abs;
      for (const Rational& w : inst.weights())
        if (w.abs() > w_abs) w_abs = w.abs();
      Rational bonus =
          Rational(2LL * std::min(inst.n_left(), inst.n_right())) * w_abs + Rational(1);
      for (const Rational& w : inst.weights()) out.weights.push_back(bonus - w);
      break;
    }
  }
  return out;
}

namespace {

BipartiteInstance with_weights(const BipartiteInstance& inst, std::vector<Rational> weights) {
  return BipartiteInstance(inst.n_left(), inst.n_right(), inst.edges(), std::move(weights));
}

}  // namespace

Potential recover_max_weight_potential(const BipartiteInstance& inst, const Matching& m) {
  int nl = inst.n_left(), nr = inst.n_right();
  std::vector<int> match_of_left(nl, -1), match_of_right(nr, -1);
  for (const Edge& e : m.edges) {
    match_of_left[e.left] = e.right;
    match_of_right[e.right] = e.left;
  }

  // Unknowns: p(u) for matched left u; p(v) for matched right v is
  // w(u1,v) - p(u1) through its partner u1; unmatched vertices are fixed 0.
  // Lower bounds and difference constraints are relaxed to a least fixpoint,
  // then the partner upper bounds are checked. Infeasibility of any step
  // means M is not a maximum-weight matching.
  std::vector<Rational> p(nl);
  std::vector<Rational> ub(nl);
  std::vector<bool> has_ub(nl, false);

  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    bool lm = match_of_left[e.left] != -1, rm = match_of_right[e.right] != -1;
    const Rational& w = inst.weight(i);
    if (!lm && !rm) {
      if (w > Rational(0))
        throw std::logic_error("dual recovery: free positive edge, matching not optimal");
    } else if (lm && !rm) {
      if (w > p[e.left]) p[e.left] = w;  // p(u) >= w
    } else if (!lm && rm) {
      // p(v) >= w(u,v), so p(u1) <= w(u1,v) - w(u,v)
      int u1 = match_of_right[e.right];
      Rational bound = inst.weight(Edge{u1, e.right}) - w;
      if (!has_ub[u1] || bound < ub[u1]) {
        ub[u1] = bound;
        has_ub[u1] = true;
      }
    }
  }
  // partner nonnegativity: p(u) <= w(u, partner)
  for (int u = 0; u < nl; ++u) {
    if (match_of_left[u] == -1) continue;
    Rational bound = inst.weight(Edge{u, match_of_left[u]});
    if (!has_ub[u] || bound < ub[u]) {
      ub[u] = bound;
      has_ub[u] = true;
    }
  }

  // difference constraints p(u) >= p(u1) + w(u,v) - w(u1,v) for edges (u,v)
  // with v matched to u1 != u
  struct Diff {
    int from;  // u1
    int to;    // u
    Rational delta;
  };
  std::vector<Diff> diffs;
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (match_of_left[e.left] == -1) continue;
    int u1 = match_of_right[e.right];
    if (u1 == -1 || u1 == e.left) continue;
    diffs.push_back({u1, e.left, inst.weight(i) - inst.weight(Edge{u1, e.right})});
  }

  int rounds = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Diff& d : diffs) {
      Rational candidate = p[d.from] + d.delta;
      if (candidate > p[d.to]) {
        p[d.to] = candidate;
        changed = true;
      }
    }
    if (++rounds > m.size() + 1)
      throw std::logic_error("dual recovery: positive cycle, matching not optimal");
  }
  for (int u = 0; u < nl; ++u)
    if (match_of_left[u] != -1 && has_ub[u] && p[u] > ub[u])
      throw std::logic_error("dual recovery: bounds conflict, matching not optimal");

  Potential out(nl, nr);
  for (int u = 0; u < nl; ++u)
    if (match_of_left[u] != -1) out.left[u] = p[u];
  for (int v = 0; v < nr; ++v)
    if (match_of_right[v] != -1)
      out.right[v] = inst.weight(Edge{match_of_right[v], v}) - p[match_of_right[v]];
  return out;
}

Rational solution_value(ProblemKind problem, const BipartiteInstance& inst, const Matching& m) {
  if (problem == ProblemKind::MaxCardinality) return Rational(m.size());
  return m.weight(inst);
}

SolveOutcome solve_problem(ProblemKind problem, Algorithm algorithm,
                           const BipartiteInstance& inst,
                           const HungarianOptions& hungarian_options) {
  if (algorithm == Algorithm::Naive && problem != ProblemKind::MaxWeightMatching)
    throw std::invalid_argument("the naive algorithm only solves maxw");

  SolveOutcome out;
  if (algorithm == Algorithm::Naive) {
    NaiveResult r = naive_solve(inst);
    out.matching = r.matching;
    out.potential = r.final_potential;
    out.stats.iterations = r.iterations;
    out.stats.pda_count = r.iterations;
  } else {
    auto solution = solve_via_reduction(problem, inst, hungarian_options);
    if (!solution) {
      out.infeasible = true;
      return out;
    }
    out.matching = solution->matching;
    out.stats.iterations = solution->stats.augmentations;
    out.stats.pda_count = solution->stats.pda_count;
    CertificateScheme scheme = certificate_scheme(problem, inst);
    if (scheme.min_perfect) {
      out.potential = solution->potential;  // padded duals restricted = certificate
    } else {
      out.potential = recover_max_weight_potential(with_weights(inst, scheme.weights),
                                                   out.matching);
    }
  }
  out.value = solution_value(problem, inst, out.matching);
  out.certificate = verify_solution(problem, inst, out.matching, out.potential);
  return out;
}

CertificateReport verify_solution(ProblemKind problem, const BipartiteInstance& inst,
                                  const Matching& m, const Potential& pi) {
  CertificateScheme scheme = certificate_scheme(problem, inst);
  BipartiteInstance effective = with_weights(inst, std::move(scheme.weights));
  if (scheme.min_perfect) return check_min_perfect_certificate(effective, m, pi);
  return check_max_weight_certificate(effective, m, pi);
}

}  // namespace matchpd
