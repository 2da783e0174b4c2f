#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "matchpd/graph.hpp"

namespace matchpd {

// Online bipartite matching: RANKING with real-valued priorities instead of
// a permutation, its vertex-weighted variant, the Adwords allocation rule,
// and the dual-fitting accounting used to probe the 1 - 1/e bound by
// Monte Carlo estimation.

struct OnlineInstance {
  int offline = 0;  // left party size
  std::optional<std::vector<Rational>> offline_weights;
  std::vector<std::vector<int>> arrivals;  // neighborhood per arriving vertex

  void validate() const;  // ranges, duplicates, weight positivity
  // offline-vs-arrival bipartite graph of all neighborhoods
  std::vector<Edge> full_graph_edges() const;
};

// one priority per offline vertex, in [0, 1]; ties break by vertex index
struct PrioritySample {
  std::vector<double> y;
};

PrioritySample draw_priorities(int offline, uint64_t seed, uint64_t trial);

struct OnlineRun {
  std::vector<std::optional<int>> match_of_arrival;  // offline index per arrival
  std::vector<Edge> matched_edges;                   // {offline, arrival}, arrival order
  Rational value;  // cardinality, matched offline weight, or adwords spend
};

// g: [0,1] -> [0,1], monotone; the default makes the RANKING bound tight
inline double default_g(double y) { return std::exp(y - 1.0); }
inline double default_big_f() { return 1.0 - std::exp(-1.0); }

// each arrival matches its unmatched neighbor of minimum priority
OnlineRun ranking_run(const OnlineInstance& inst, const PrioritySample& y);

// perturbed greedy: arrival matches the unmatched neighbor maximizing
// w_v * (1 - g(Y_v)); reduces to ranking_run for equal weights
OnlineRun vertex_weighted_run(const OnlineInstance& inst, const PrioritySample& y,
                              const std::function<double(double)>& g = default_g);

struct DualFit {
  double big_f = 0;
  std::function<double(double)> g;
  std::vector<double> pi_offline;
  std::vector<double> pi_arrival;
  double objective = 0;
};

// pi(offline v) = w_v * g(Y_v) / F and pi(arrival u) = w_v * (1 - g(Y_v)) / F
// per matched edge; zero elsewhere. The per-edge split telescopes to
// objective = value / F.
DualFit dual_fit(const OnlineInstance& inst, const OnlineRun& run, const PrioritySample& y,
                 const std::function<double(double)>& g = default_g,
                 double big_f = default_big_f());

// exact-arithmetic twin for rational-valued g: the accounting identity
// sum(pi) = value / F holds with zero tolerance
struct ExactDualFit {
  Rational big_f;
  std::vector<Rational> pi_offline;
  std::vector<Rational> pi_arrival;
  Rational objective;
};

ExactDualFit dual_fit_exact(const OnlineInstance& inst, const OnlineRun& run,
                            const PrioritySample& y,
                            const std::function<Rational(double)>& g_exact,
                            const Rational& big_f);

struct RatioEstimate {
  long long trials = 0;
  double mean_value = 0;
  Rational opt;
  double mean_ratio = 0;
  double std_error = 0;
  uint64_t seed = 0;
};

// Monte Carlo competitive ratio over independent priority samples drawn from
// per-trial substreams of `seed`; deterministic for fixed (inst, trials,
// seed) under any thread count. opt of zero is an error.
RatioEstimate monte_carlo_ratio(const OnlineInstance& inst, long long trials, uint64_t seed);

struct EdgeDualEstimate {
  int offline = 0;
  int arrival = 0;
  double estimate = 0;   // Monte Carlo E[pi(u) + pi(v)]
  double std_error = 0;
  bool flagged = false;  // estimate < constraint - 3 * std_error
};

// Empirical check that the fitted dual is feasible in expectation:
// E[pi(u) + pi(v)] >= w_u per edge of the full graph.
std::vector<EdgeDualEstimate> expected_dual_feasibility_check(
    const OnlineInstance& inst, const std::function<double(double)>& g, double big_f,
    long long trials, uint64_t seed);

// --- Adwords -----------------------------------------------------------------

struct AdwordsInstance {
  std::vector<Rational> budgets;
  std::vector<std::vector<std::pair<int, Rational>>> queries;  // (bidder, bid), sorted
  Rational bid_fraction_cap{1, 50};

  void validate() const;  // bids positive-capped and within budget * cap
  // min(sum of budgets, sum over queries of the max bid)
  Rational opt_upper_bound() const;
};

struct AdwordsRun {
  std::vector<std::optional<int>> assignment;  // bidder per query
  std::vector<Rational> spent;
  Rational revenue;
};

// each query goes to the eligible bidder maximizing bid * (1 - e^(x-1)),
// x = fraction of budget already spent; spend capped at the budget
AdwordsRun adwords_run(const AdwordsInstance& inst);

// thread cap used by the Monte Carlo loops (MATCHPD_THREADS, default: cores)
int trial_thread_count();

}  // namespace matchpd
