#pragma once

#include <functional>
#include <optional>

#include "matchpd/graph.hpp"

namespace matchpd {

enum class ProblemKind {
  MaxWeightMatching,
  MaxWeightPerfect,
  MinWeightPerfect,
  MaxCardinality,
  MinWeightMaxCardinality,
};

std::string to_string(ProblemKind p);

// Hard caps for exhaustive enumeration; exceeding the budget is an error,
// not a timeout, so CI behavior stays deterministic.
struct EnumerationBudget {
  int max_vertices = 12;
  int max_edges = 24;
};

// Every matching of the instance exactly once, by include/exclude recursion
// over the edge list. Deterministic order: the subset-lattice order induced
// by excluding before including each edge.
void enumerate_matchings(const BipartiteInstance& inst,
                         const std::function<void(const Matching&)>& visit,
                         const EnumerationBudget& budget = {});

std::vector<Matching> all_matchings(const BipartiteInstance& inst,
                                    const EnumerationBudget& budget = {});

struct BruteOptimum {
  Rational value;
  Matching witness;
};

// Exact optimum by exhaustion; nullopt = infeasible (perfect variants only).
std::optional<BruteOptimum> brute_optimum(ProblemKind problem, const BipartiteInstance& inst,
                                          const EnumerationBudget& budget = {});

}  // namespace matchpd
