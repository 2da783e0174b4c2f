#include "matchpd/naive_pd.hpp"

#include <stdexcept>

#include "matchpd/certificates.hpp"

namespace matchpd {

Potential init_potential(const BipartiteInstance& inst) {
  for (const Rational& w : inst.weights())
    if (w < Rational(0)) throw std::invalid_argument("init_potential: negative weight");
  Potential pi(inst.n_left(), inst.n_right());
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (inst.weight(i) > pi.left[e.left]) pi.left[e.left] = inst.weight(i);
  }
  return pi;
}

Rational find_epsilon(const BipartiteInstance& inst, const Potential& pi, const VertexSet& x) {
  if (x.empty()) throw std::invalid_argument("find_epsilon: empty X");
  if (!x.one_sided()) throw std::invalid_argument("find_epsilon: X not one-sided");
  VertexSet reach = gamma(inst, pi, x);
  std::optional<Rational> eps;
  auto consider = [&](const Rational& v) {
    if (!eps || v < *eps) eps = v;
  };
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    VertexId l = left_vertex(e.left), r = right_vertex(e.right);
    bool from_x = x.contains(l) || x.contains(r);
    if (!from_x) continue;
    VertexId other = x.contains(l) ? r : l;
    if (reach.contains(other)) continue;
    Rational s = pi.left[e.left] + pi.right[e.right] - inst.weight(i);
    if (s > Rational(0)) consider(s);
  }
  for (const VertexId& v : x.to_vector()) consider(pi.at(v));
  return *eps;  // the pi term keeps the candidate set nonempty
}

Potential pd_adjust(const BipartiteInstance& inst, const Potential& pi, const VertexSet& x,
                    const Rational& eps) {
  VertexSet reach = gamma(inst, pi, x);
  // adjustment-lemma premises, checked in order
  for (const Edge& e : inst.edges())
    if (x.contains(left_vertex(e.left)) && x.contains(right_vertex(e.right)))
      throw std::invalid_argument("pd_adjust: edge inside X (" + e.to_string() + ")");
  if (eps < Rational(0)) throw std::invalid_argument("pd_adjust: negative epsilon");
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    VertexId l = left_vertex(e.left), r = right_vertex(e.right);
    bool in_l = x.contains(l), in_r = x.contains(r);
    if (in_l == in_r) continue;
    VertexId other = in_l ? r : l;
    if (reach.contains(other)) continue;
    Rational s = pi.left[e.left] + pi.right[e.right] - inst.weight(i);
    if (eps > s)
      throw std::invalid_argument("pd_adjust: epsilon exceeds slack of escaping edge " +
                                  e.to_string());
  }
  for (const VertexId& v : x.to_vector())
    if (eps > pi.at(v))
      throw std::invalid_argument("pd_adjust: epsilon exceeds potential of " + v.to_string());

  Potential out = pi;
  for (const VertexId& v : x.to_vector()) out.at(v) -= eps;
  for (const VertexId& v : reach.to_vector()) out.at(v) += eps;

  Rational expected = pi.total() + Rational(reach.size() - x.size()) * eps;
  if (out.total() != expected)
    throw std::logic_error("pd_adjust: potential sum identity violated");
  if (!is_feasible_potential(inst, out))
    throw std::logic_error("pd_adjust: adjusted potential infeasible");
  return out;
}

Rational common_weight_unit(const BipartiteInstance& inst) {
  Rational g;
  for (const Rational& w : inst.weights()) g = rational_gcd(g, w);
  return g;
}

namespace {

long long default_cap(const BipartiteInstance& inst, const Rational& alpha) {
  if (alpha.is_zero()) return 16;
  Rational max_w;
  for (const Rational& w : inst.weights())
    if (w > max_w) max_w = w;
  Rational steps = max_w / alpha;  // integral: max_w is a multiple of alpha
  long long cap = 10LL * inst.n_vertices() * steps.num();
  return cap < 16 ? 16 : cap;
}

}  // namespace

NaiveResult naive_solve(const BipartiteInstance& inst, const NaiveOptions& options) {
  NaiveState state{init_potential(inst), 0};
  Rational alpha = common_weight_unit(inst);
  long long cap = options.iteration_cap > 0 ? options.iteration_cap : default_cap(inst, alpha);

  auto validate = [&](const Potential& prev_pi) {
    if (!is_feasible_potential(inst, state.pi))
      throw std::logic_error("naive_solve: invariant N1 violated");
    if (!alpha.is_zero()) {
      for (const Rational& v : state.pi.left)
        if (!(v / alpha).is_integer())
          throw std::logic_error("naive_solve: invariant N2 violated");
      for (const Rational& v : state.pi.right)
        if (!(v / alpha).is_integer())
          throw std::logic_error("naive_solve: invariant N2 violated");
    }
    if (!(state.pi.total() < prev_pi.total()))
      throw std::logic_error("naive_solve: dual objective did not decrease");
  };

  while (true) {
    VertexSet required(inst.n_left(), inst.n_right());
    for (int i = 0; i < inst.n_left(); ++i)
      if (state.pi.left[i] > Rational(0)) required.insert(left_vertex(i));
    for (int i = 0; i < inst.n_right(); ++i)
      if (state.pi.right[i] > Rational(0)) required.insert(right_vertex(i));

    auto outcome = covering_matching_or_violator(inst, state.pi, required);
    if (std::holds_alternative<Matching>(outcome)) {
      return {std::get<Matching>(outcome), state.pi, state.iteration};
    }

    if (state.iteration >= cap)
      throw std::runtime_error("naive_solve: iteration cap exceeded (nontermination?)");
    const VertexSet& x = std::get<VertexSet>(outcome);
    Rational eps = find_epsilon(inst, state.pi, x);
    Potential prev = state.pi;
    state.pi = pd_adjust(inst, state.pi, x, eps);
    ++state.iteration;
    if (options.validate_invariants) validate(prev);
    if (options.on_adjust) options.on_adjust(state);
  }
}

}  // namespace matchpd
