#include "matchpd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace matchpd {

std::string to_string(ProblemKind p) {
  switch (p) {
    case ProblemKind::MaxWeightMatching: return "maxw";
    case ProblemKind::MaxWeightPerfect: return "maxwperfect";
    case ProblemKind::MinWeightPerfect: return "minperfect";
    case ProblemKind::MaxCardinality: return "maxcard";
    case ProblemKind::MinWeightMaxCardinality: return "minwmaxcard";
  }
  return "?";
}

namespace {

void check_budget(const BipartiteInstance& inst, const EnumerationBudget& budget) {
  if (inst.n_vertices() > budget.max_vertices)
    throw std::invalid_argument("oracle: vertex budget exceeded");
  if ((int)inst.edges().size() > budget.max_edges)
    throw std::invalid_argument("oracle: edge budget exceeded");
}

void recurse(const BipartiteInstance& inst, size_t next, std::vector<Edge>& chosen,
             std::vector<bool>& used_left, std::vector<bool>& used_right,
             const std::function<void(const Matching&)>& visit) {
  if (next == inst.edges().size()) {
    visit(Matching(chosen));
    return;
  }
  const Edge& e = inst.edges()[next];
  recurse(inst, next + 1, chosen, used_left, used_right, visit);
  if (!used_left[e.left] && !used_right[e.right]) {
    used_left[e.left] = used_right[e.right] = true;
    chosen.push_back(e);
    recurse(inst, next + 1, chosen, used_left, used_right, visit);
    chosen.pop_back();
    used_left[e.left] = used_right[e.right] = false;
  }
}

bool covers_all(const BipartiteInstance& inst, const Matching& m) {
  return 2 * m.size() == inst.n_vertices();
}

}  // namespace

void enumerate_matchings(const BipartiteInstance& inst,
                         const std::function<void(const Matching&)>& visit,
                         const EnumerationBudget& budget) {
  check_budget(inst, budget);
  std::vector<Edge> chosen;
  std::vector<bool> used_left(inst.n_left(), false), used_right(inst.n_right(), false);
  recurse(inst, 0, chosen, used_left, used_right, visit);
}

std::vector<Matching> all_matchings(const BipartiteInstance& inst,
                                    const EnumerationBudget& budget) {
  std::vector<Matching> out;
  enumerate_matchings(inst, [&](const Matching& m) { out.push_back(m); }, budget);
  return out;
}

std::optional<BruteOptimum> brute_optimum(ProblemKind problem, const BipartiteInstance& inst,
                                          const EnumerationBudget& budget) {
  check_budget(inst, budget);
  bool perfect_only =
      problem == ProblemKind::MaxWeightPerfect || problem == ProblemKind::MinWeightPerfect;
  if (perfect_only && inst.n_left() != inst.n_right()) return std::nullopt;

  std::optional<BruteOptimum> best;
  int best_card = -1;
  auto consider = [&](const Matching& m) {
    if (perfect_only && !covers_all(inst, m)) return;
    Rational w = m.weight(inst);
    switch (problem) {
      case ProblemKind::MaxWeightMatching:
      case ProblemKind::MaxWeightPerfect:
        if (!best || w > best->value) best = {w, m};
        break;
      case ProblemKind::MinWeightPerfect:
        if (!best || w < best->value) best = {w, m};
        break;
      case ProblemKind::MaxCardinality:
        if (!best || m.size() > best_card) {
          best = {Rational(m.size()), m};
          best_card = m.size();
        }
        break;
      case ProblemKind::MinWeightMaxCardinality:
        if (!best || m.size() > best_card || (m.size() == best_card && w < best->value)) {
          best = {w, m};
          best_card = m.size();
        }
        break;
    }
  };
  enumerate_matchings(inst, consider, budget);
  return best;
}

}  // namespace matchpd
