#pragma once

#include <functional>
#include <optional>
#include <variant>

#include "matchpd/graph.hpp"
#include "matchpd/oracle.hpp"

namespace matchpd {

// The Hungarian Method for min-weight perfect matching, driven by a path
// search over alternating forests that interleaves forest growth with dual
// adjustments, plus reductions of the other matching variants onto it.

enum class PathSearchFlag { DualUnbounded, LMatched, NextIteration };

struct PathSearchResult {
  PathSearchFlag flag;
  Potential updated_potential;  // NextIteration: pi'; LMatched: input pi
  std::vector<Edge> path;       // NextIteration: augmenting path, free R end first
  Potential ray;                // DualUnbounded: +1 on even L, -1 on odd R
  long long pda_count = 0;      // adjustments performed inside this search
};

// Preconditions: M a matching, M inside the tight subgraph of pi, pi
// mp-feasible. Grows a forest from every unmatched left vertex; returns
//  - LMatched when L is already covered,
//  - NextIteration with (pi', p): p a tight M-augpath under pi',
//  - DualUnbounded with a ray certifying an unbounded dual (no perfect
//    matching exists).
PathSearchResult path_search(const BipartiteInstance& inst, const Matching& m,
                             const Potential& pi);

// pi(u in L) = min incident weight (0 if isolated), pi(R) = 0
Potential initial_mp_feasible(const BipartiteInstance& inst);

struct HungarianStats {
  long long augmentations = 0;
  long long pda_count = 0;
  long long path_search_calls = 0;
};

struct HungarianOptions {
  // literal re-checks of the path-search contract (P1-P3) and the loop
  // invariants HM1-HM3 after every call; throws std::logic_error on violation
  bool validate_contracts = false;
};

struct HungarianSolution {
  Matching matching;
  Potential potential;
  HungarianStats stats;
};

struct Infeasible {
  HungarianStats stats;
};

using HungarianOutcome = std::variant<HungarianSolution, Infeasible>;

HungarianOutcome hungarian_solve(const BipartiteInstance& inst,
                                 const std::optional<Potential>& pi0 = std::nullopt,
                                 const HungarianOptions& options = {});

// --- reductions to min-weight perfect matching ------------------------------

struct Reduction {
  BipartiteInstance instance;  // complete bipartite, equal sides
  // maps a min-weight perfect matching of `instance` back to an optimal
  // solution of the original problem; nullopt = original problem infeasible
  std::function<std::optional<Matching>(const Matching&)> extract;
};

Reduction reduce_to_min_perfect(ProblemKind problem, const BipartiteInstance& inst);

// reduce + solve + extract; nullopt = infeasible
std::optional<HungarianSolution> solve_via_reduction(ProblemKind problem,
                                                     const BipartiteInstance& inst,
                                                     const HungarianOptions& options = {});

}  // namespace matchpd
