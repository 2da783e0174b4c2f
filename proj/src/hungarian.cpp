#include "matchpd/hungarian.hpp"

#include <map>
#include <stdexcept>

#include "matchpd/certificates.hpp"
#include "matchpd/slack_queue.hpp"

namespace matchpd {

Potential initial_mp_feasible(const BipartiteInstance& inst) {
  Potential pi(inst.n_left(), inst.n_right());
  std::vector<bool> seen(inst.n_left(), false);
  for (int i = 0; i < (int)inst.edges().size(); ++i) {
    const Edge& e = inst.edges()[i];
    if (!seen[e.left] || inst.weight(i) < pi.left[e.left]) {
      pi.left[e.left] = inst.weight(i);
      seen[e.left] = true;
    }
  }
  return pi;
}

namespace {

void check_search_preconditions(const BipartiteInstance& inst, const Matching& m,
                                const Potential& pi) {
  if ((int)pi.left.size() != inst.n_left() || (int)pi.right.size() != inst.n_right())
    throw std::invalid_argument("path_search: potential not total on V");
  if (!is_matching(inst, m)) throw std::invalid_argument("path_search: M is not a matching");
  if (!is_mp_feasible(inst, pi))
    throw std::invalid_argument("path_search: potential not mp-feasible");
  for (const Edge& e : m.edges)
    if (!slack(inst, pi, e).is_zero())
      throw std::invalid_argument("path_search: matched edge not tight");
}

}  // namespace

namespace {

// Alternating forest rooted at the unmatched left vertices, fused with the
// running dual adjustment. Instead of rewriting potentials on every PDA, a
// vertex records the accumulated shift at join time; its current potential
// is pi + (shift - joined) on the even side and pi - (shift - joined) on the
// odd side. Parent edges: every odd right vertex keeps the tight edge that
// reached it, and an even non-root hangs off its matched partner.
struct AlternatingForest {
  std::vector<std::optional<Rational>> even_joined;  // per left vertex
  std::vector<std::optional<Rational>> odd_joined;   // per right vertex
  std::vector<Edge> odd_parent;
  Rational shift;  // total dual adjustment so far

  AlternatingForest(int nl, int nr)
      : even_joined(nl), odd_joined(nr), odd_parent(nr, Edge{-1, -1}) {}

  bool is_even(int u) const { return even_joined[u].has_value(); }
  bool is_odd(int v) const { return odd_joined[v].has_value(); }

  Potential materialize(const Potential& pi) const {
    Potential out = pi;
    for (size_t u = 0; u < even_joined.size(); ++u)
      if (even_joined[u]) out.left[u] += shift - *even_joined[u];
    for (size_t v = 0; v < odd_joined.size(); ++v)
      if (odd_joined[v]) out.right[v] -= shift - *odd_joined[v];
    return out;
  }

  Potential ray() const {
    Potential d((int)even_joined.size(), (int)odd_joined.size());
    for (size_t u = 0; u < even_joined.size(); ++u)
      if (even_joined[u]) d.left[u] = Rational(1);
    for (size_t v = 0; v < odd_joined.size(); ++v)
      if (odd_joined[v]) d.right[v] = Rational(-1);
    return d;
  }
};

}  // namespace

PathSearchResult path_search(const BipartiteInstance& inst, const Matching& m,
                             const Potential& pi) {
  check_search_preconditions(inst, m, pi);
  int nl = inst.n_left(), nr = inst.n_right();

  std::vector<int> match_of_left(nl, -1), match_of_right(nr, -1);
  for (const Edge& e : m.edges) {
    match_of_left[e.left] = e.right;
    match_of_right[e.right] = e.left;
  }

  bool all_matched = true;
  for (int u = 0; u < nl; ++u) all_matched = all_matched && match_of_left[u] != -1;
  if (all_matched) return {PathSearchFlag::LMatched, pi, {}, {}, 0};

  AlternatingForest forest(nl, nr);
  SlackQueue queue(nr);
  long long pda = 0;

  auto add_even = [&](int u) {
    forest.even_joined[u] = forest.shift;
    for (int idx : inst.incident(left_vertex(u))) {
      const Edge& e = inst.edges()[idx];
      if (forest.is_odd(e.right)) continue;
      Rational key = inst.weight(idx) - pi.left[u] - pi.right[e.right];
      queue.relax(e.right, key, e);
    }
  };

  for (int u = 0; u < nl; ++u)
    if (match_of_left[u] == -1) add_even(u);

  while (true) {
    auto entry = queue.extract_min();
    if (!entry) {
      // no finite epsilon: the dual ray +1 on evens / -1 on odds is feasible
      // for every step size, so no perfect matching exists
      return {PathSearchFlag::DualUnbounded, pi, {}, forest.ray(), pda};
    }
    if (entry->key.sign() < 0)
      throw std::logic_error("path_search: negative reduced slack (mp-feasibility lost)");
    if (entry->key.sign() > 0) {
      // PDA: raise evens, lower odds by the smallest outside slack
      forest.shift += entry->key;
      queue.apply_uniform_shift(entry->key);
      ++pda;
    }
    int v = entry->vertex;
    if (match_of_right[v] == -1) {
      // free right vertex reached through tight edges: augmenting path from
      // the witness edge back along parent pointers to a root
      std::vector<Edge> path{entry->witness};
      int u = entry->witness.left;
      while (match_of_left[u] != -1) {
        int r = match_of_left[u];
        path.push_back({u, r});
        path.push_back(forest.odd_parent[r]);
        u = forest.odd_parent[r].left;
      }
      return {PathSearchFlag::NextIteration, forest.materialize(pi), path, {}, pda};
    }
    forest.odd_joined[v] = forest.shift;
    forest.odd_parent[v] = entry->witness;
    add_even(match_of_right[v]);
  }
}

namespace {

void validate_search_result(const BipartiteInstance& inst, const Matching& m, const Potential& pi,
                            const PathSearchResult& r) {
  switch (r.flag) {
    case PathSearchFlag::DualUnbounded:
      if (!check_unbounded_ray(inst, pi, r.ray))
        throw std::logic_error("path_search contract: bad dual ray");
      break;
    case PathSearchFlag::LMatched: {
      std::vector<bool> covered(inst.n_left(), false);
      for (const Edge& e : m.edges) covered[e.left] = true;
      for (int u = 0; u < inst.n_left(); ++u)
        if (!covered[u]) throw std::logic_error("path_search contract: L not covered");
      break;
    }
    case PathSearchFlag::NextIteration: {
      if (!is_mp_feasible(inst, r.updated_potential))
        throw std::logic_error("path_search contract: pi' not mp-feasible");
      for (const Edge& e : m.edges)
        if (!slack(inst, r.updated_potential, e).is_zero())
          throw std::logic_error("path_search contract: matched edge untight under pi'");
      for (const Edge& e : r.path)
        if (!slack(inst, r.updated_potential, e).is_zero())
          throw std::logic_error("path_search contract: path edge untight under pi'");
      if (!is_augmenting_path(m, r.path))
        throw std::logic_error("path_search contract: path is not an augmenting path");
      break;
    }
  }
}

}  // namespace

HungarianOutcome hungarian_solve(const BipartiteInstance& inst,
                                 const std::optional<Potential>& pi0,
                                 const HungarianOptions& options) {
  HungarianStats stats;
  if (inst.n_left() != inst.n_right()) return Infeasible{stats};

  Potential pi = pi0 ? *pi0 : initial_mp_feasible(inst);
  if (pi0 && !is_mp_feasible(inst, pi))
    throw std::invalid_argument("hungarian_solve: supplied potential not mp-feasible");
  Matching m;

  while (true) {
    PathSearchResult r = path_search(inst, m, pi);
    ++stats.path_search_calls;
    stats.pda_count += r.pda_count;
    if (options.validate_contracts) validate_search_result(inst, m, pi, r);
    switch (r.flag) {
      case PathSearchFlag::DualUnbounded:
        return Infeasible{stats};
      case PathSearchFlag::LMatched:
        return HungarianSolution{m, pi, stats};
      case PathSearchFlag::NextIteration:
        m = augment(m, r.path);
        pi = r.updated_potential;
        ++stats.augmentations;
        if (options.validate_contracts) {
          if (!is_matching(inst, m)) throw std::logic_error("hungarian: HM1 violated");
          for (const Edge& e : m.edges)
            if (!slack(inst, pi, e).is_zero()) throw std::logic_error("hungarian: HM2 violated");
          if (!is_mp_feasible(inst, pi)) throw std::logic_error("hungarian: HM3 violated");
        }
        break;
    }
  }
}

namespace {

Rational max_abs_weight(const BipartiteInstance& inst) {
  Rational w;
  for (const Rational& x : inst.weights())
    if (x.abs() > w) w = x.abs();
  return w;
}

}  // namespace

Reduction reduce_to_min_perfect(ProblemKind problem, const BipartiteInstance& inst) {
  if (problem == ProblemKind::MaxWeightMatching)
    for (const Rational& w : inst.weights())
      if (w < Rational(0))
        throw std::invalid_argument("reduce: max-weight matching needs nonnegative weights");

  int n = std::max(inst.n_left(), inst.n_right());
  bool perfect =
      problem == ProblemKind::MaxWeightPerfect || problem == ProblemKind::MinWeightPerfect;

  Rational w_max;
  for (const Rational& w : inst.weights())
    if (w > w_max) w_max = w;
  // filler penalty large enough that one extra filler edge always costs more
  // than any achievable swing in real-edge weight
  Rational penalty = Rational(2LL * n) * max_abs_weight(inst) + Rational(1);

  std::map<Edge, Rational> real;
  for (int i = 0; i < (int)inst.edges().size(); ++i) real.emplace(inst.edges()[i], inst.weight(i));

  std::vector<Edge> edges;
  std::vector<Rational> weights;
  edges.reserve((size_t)n * n);
  weights.reserve((size_t)n * n);
  for (int l = 0; l < n; ++l) {
    for (int r = 0; r < n; ++r) {
      Edge e{l, r};
      auto it = real.find(e);
      bool is_real = it != real.end();
      Rational w;
      switch (problem) {
        case ProblemKind::MaxWeightMatching:
          w = is_real ? w_max - it->second : w_max;
          break;
        case ProblemKind::MaxCardinality:
          w = is_real ? Rational(0) : Rational(1);
          break;
        case ProblemKind::MinWeightMaxCardinality:
          w = is_real ? it->second : penalty;
          break;
        case ProblemKind::MinWeightPerfect:
          w = is_real ? it->second : penalty;
          break;
        case ProblemKind::MaxWeightPerfect:
          w = is_real ? -it->second : penalty;
          break;
      }
      edges.push_back(e);
      weights.push_back(w);
    }
  }

  int n_left = inst.n_left(), n_right = inst.n_right();
  auto is_original_vertex = [n_left, n_right](const Edge& e) {
    return e.left < n_left || e.right < n_right;
  };
  auto is_real_edge = [real](const Edge& e) { return real.count(e) > 0; };

  Reduction out{BipartiteInstance(n, n, std::move(edges), std::move(weights)), nullptr};
  out.extract = [perfect, is_original_vertex, is_real_edge,
                 n_left, n_right](const Matching& mp) -> std::optional<Matching> {
    std::vector<Edge> kept;
    for (const Edge& e : mp.edges) {
      bool original_pair = e.left < n_left && e.right < n_right;
      if (original_pair && is_real_edge(e)) {
        kept.push_back(e);
      } else if (perfect && is_original_vertex(e)) {
        // an original vertex pairs through a penalty or dummy edge: no
        // perfect matching of the original instance exists
        return std::nullopt;
      }
    }
    return Matching(std::move(kept));
  };
  return out;
}

std::optional<HungarianSolution> solve_via_reduction(ProblemKind problem,
                                                     const BipartiteInstance& inst,
                                                     const HungarianOptions& options) {
  bool perfect =
      problem == ProblemKind::MaxWeightPerfect || problem == ProblemKind::MinWeightPerfect;
  if (perfect && inst.n_left() != inst.n_right()) return std::nullopt;

  Reduction red = reduce_to_min_perfect(problem, inst);
  HungarianOutcome outcome = hungarian_solve(red.instance, std::nullopt, options);
  if (std::holds_alternative<Infeasible>(outcome)) return std::nullopt;
  auto& sol = std::get<HungarianSolution>(outcome);
  auto extracted = red.extract(sol.matching);
  if (!extracted) return std::nullopt;

  // restrict the padded duals back to the original vertex set; for the
  // perfect variants this is the optimality certificate (real edges keep
  // their transformed weights), for the padded variants it is informational
  Potential restricted(inst.n_left(), inst.n_right());
  for (int i = 0; i < inst.n_left(); ++i) restricted.left[i] = sol.potential.left[i];
  for (int i = 0; i < inst.n_right(); ++i) restricted.right[i] = sol.potential.right[i];
  return HungarianSolution{std::move(*extracted), std::move(restricted), sol.stats};
}

}  // namespace matchpd
