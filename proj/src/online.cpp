#include "matchpd/online.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "matchpd/hungarian.hpp"
#include "matchpd/rng.hpp"

namespace matchpd {

void OnlineInstance::validate() const {
  if (offline < 0) throw std::invalid_argument("online instance: negative offline count");
  if (offline_weights) {
    if ((int)offline_weights->size() != offline)
      throw std::invalid_argument("online instance: weight per offline vertex required");
    for (const Rational& w : *offline_weights)
      if (!(w > Rational(0)))
        throw std::invalid_argument("online instance: offline weights must be positive");
  }
  for (const auto& nbh : arrivals) {
    std::vector<bool> seen(offline, false);
    for (int v : nbh) {
      if (v < 0 || v >= offline)
        throw std::invalid_argument("online instance: neighborhood index out of range");
      if (seen[v]) throw std::invalid_argument("online instance: duplicate neighbor");
      seen[v] = true;
    }
  }
}

std::vector<Edge> OnlineInstance::full_graph_edges() const {
  std::vector<Edge> edges;
  for (int j = 0; j < (int)arrivals.size(); ++j)
    for (int v : arrivals[j]) edges.push_back({v, j});
  return edges;
}

PrioritySample draw_priorities(int offline, uint64_t seed, uint64_t trial) {
  PrioritySample s;
  s.y.resize(offline);
  for (int i = 0; i < offline; ++i) s.y[i] = to_unit_double(substream(seed, trial, (uint64_t)i));
  return s;
}

OnlineRun ranking_run(const OnlineInstance& inst, const PrioritySample& y) {
  std::vector<bool> taken(inst.offline, false);
  OnlineRun run;
  run.match_of_arrival.assign(inst.arrivals.size(), std::nullopt);
  long long matched = 0;
  for (int j = 0; j < (int)inst.arrivals.size(); ++j) {
    int best = -1;
    for (int v : inst.arrivals[j]) {
      if (taken[v]) continue;
      if (best == -1 || y.y[v] < y.y[best] || (y.y[v] == y.y[best] && v < best)) best = v;
    }
    if (best != -1) {
      taken[best] = true;
      run.match_of_arrival[j] = best;
      run.matched_edges.push_back({best, j});
      ++matched;
    }
  }
  run.value = Rational(matched);
  return run;
}

OnlineRun vertex_weighted_run(const OnlineInstance& inst, const PrioritySample& y,
                              const std::function<double(double)>& g) {
  if (!inst.offline_weights)
    throw std::invalid_argument("vertex_weighted_run: offline weights missing");
  const auto& w = *inst.offline_weights;
  std::vector<bool> taken(inst.offline, false);
  std::vector<double> discount(inst.offline);
  for (int v = 0; v < inst.offline; ++v) discount[v] = w[v].to_double() * (1.0 - g(y.y[v]));
  OnlineRun run;
  run.match_of_arrival.assign(inst.arrivals.size(), std::nullopt);
  for (int j = 0; j < (int)inst.arrivals.size(); ++j) {
    int best = -1;
    for (int v : inst.arrivals[j]) {
      if (taken[v]) continue;
      if (best == -1 || discount[v] > discount[best] ||
          (discount[v] == discount[best] && v < best))
        best = v;
    }
    if (best != -1) {
      taken[best] = true;
      run.match_of_arrival[j] = best;
      run.matched_edges.push_back({best, j});
      run.value += w[best];
    }
  }
  return run;
}

DualFit dual_fit(const OnlineInstance& inst, const OnlineRun& run, const PrioritySample& y,
                 const std::function<double(double)>& g, double big_f) {
  if (!(big_f > 0.0 && big_f <= 1.0)) throw std::invalid_argument("dual_fit: F outside (0,1]");
  DualFit fit;
  fit.big_f = big_f;
  fit.g = g;
  fit.pi_offline.assign(inst.offline, 0.0);
  fit.pi_arrival.assign(inst.arrivals.size(), 0.0);
  for (const Edge& e : run.matched_edges) {
    double w = inst.offline_weights ? (*inst.offline_weights)[e.left].to_double() : 1.0;
    double gy = g(y.y[e.left]);
    fit.pi_offline[e.left] = w * gy / big_f;
    fit.pi_arrival[e.right] = w * (1.0 - gy) / big_f;
  }
  for (double v : fit.pi_offline) fit.objective += v;
  for (double v : fit.pi_arrival) fit.objective += v;
  return fit;
}

ExactDualFit dual_fit_exact(const OnlineInstance& inst, const OnlineRun& run,
                            const PrioritySample& y,
                            const std::function<Rational(double)>& g_exact,
                            const Rational& big_f) {
  if (!(big_f > Rational(0) && big_f <= Rational(1)))
    throw std::invalid_argument("dual_fit_exact: F outside (0,1]");
  ExactDualFit fit;
  fit.big_f = big_f;
  fit.pi_offline.assign(inst.offline, Rational(0));
  fit.pi_arrival.assign(inst.arrivals.size(), Rational(0));
  for (const Edge& e : run.matched_edges) {
    Rational w = inst.offline_weights ? (*inst.offline_weights)[e.left] : Rational(1);
    Rational gy = g_exact(y.y[e.left]);
    if (gy < Rational(0) || gy > Rational(1))
      throw std::invalid_argument("dual_fit_exact: g outside [0,1]");
    fit.pi_offline[e.left] = w * gy / big_f;
    fit.pi_arrival[e.right] = w * (Rational(1) - gy) / big_f;
  }
  for (const Rational& v : fit.pi_offline) fit.objective += v;
  for (const Rational& v : fit.pi_arrival) fit.objective += v;
  return fit;
}

int trial_thread_count() {
  if (const char* env = std::getenv("MATCHPD_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return (int)v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : (int)hw;
}

namespace {

constexpr long long kChunk = 1024;

// Runs `body(trial, accumulator)` for every trial, chunked so that thread
// scheduling cannot affect accumulation order: chunk results are combined
// sequentially by chunk index.
template <typename Acc>
Acc run_chunked(long long trials, const std::function<void(long long, Acc&)>& body) {
  long long n_chunks = (trials + kChunk - 1) / kChunk;
  std::vector<Acc> per_chunk((size_t)n_chunks);
  int threads = std::min<long long>(trial_thread_count(), n_chunks);
  std::atomic<long long> next_chunk{0};
  auto worker = [&]() {
    while (true) {
      long long c = next_chunk.fetch_add(1);
      if (c >= n_chunks) return;
      long long lo = c * kChunk, hi = std::min(trials, lo + kChunk);
      for (long long t = lo; t < hi; ++t) body(t, per_chunk[(size_t)c]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Acc total;
  for (const Acc& a : per_chunk) total.combine(a);
  return total;
}

struct MeanAcc {
  double sum = 0, sum_sq = 0;
  void add(double x) {
    sum += x;
    sum_sq += x * x;
  }
  void combine(const MeanAcc& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  double mean(long long n) const { return sum / (double)n; }
  double std_error(long long n) const {
    if (n < 2) return 0.0;
    double var = (sum_sq - sum * sum / (double)n) / (double)(n - 1);
    if (var < 0) var = 0;
    return std::sqrt(var / (double)n);
  }
};

Rational offline_optimum(const OnlineInstance& inst) {
  std::vector<Edge> edges = inst.full_graph_edges();
  if (!inst.offline_weights)
    return Rational(
        max_cardinality_matching(edges, inst.offline, (int)inst.arrivals.size()).size());
  // weighted offline optimum: max-weight matching where an edge pays its
  // offline endpoint's weight, solved exactly through the perfect-matching
  // reduction
  std::vector<Rational> ws;
  ws.reserve(edges.size());
  for (const Edge& e : edges) ws.push_back((*inst.offline_weights)[e.left]);
  BipartiteInstance graph(inst.offline, (int)inst.arrivals.size(), std::move(edges),
                          std::move(ws));
  auto sol = solve_via_reduction(ProblemKind::MaxWeightMatching, graph);
  if (!sol) throw std::logic_error("offline_optimum: reduction failed");
  return sol->matching.weight(graph);
}

}  // namespace

RatioEstimate monte_carlo_ratio(const OnlineInstance& inst, long long trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_ratio: trials must be >= 1");
  inst.validate();
  Rational opt = offline_optimum(inst);
  if (opt.is_zero()) throw std::invalid_argument("monte_carlo_ratio: offline optimum is zero");
  double opt_d = opt.to_double();

  MeanAcc acc = run_chunked<MeanAcc>(trials, [&](long long t, MeanAcc& a) {
    PrioritySample y = draw_priorities(inst.offline, seed, (uint64_t)t);
    OnlineRun run = inst.offline_weights ? vertex_weighted_run(inst, y) : ranking_run(inst, y);
    a.add(run.value.to_double() / opt_d);
  });

  RatioEstimate est;
  est.trials = trials;
  est.opt = opt;
  est.mean_ratio = acc.mean(trials);
  est.mean_value = est.mean_ratio * opt_d;
  est.std_error = acc.std_error(trials);
  est.seed = seed;
  return est;
}

std::vector<EdgeDualEstimate> expected_dual_feasibility_check(
    const OnlineInstance& inst, const std::function<double(double)>& g, double big_f,
    long long trials, uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("dual check: trials must be >= 1");
  inst.validate();
  std::vector<Edge> edges = inst.full_graph_edges();

  struct EdgeAcc {
    std::vector<MeanAcc> per_edge;
    void combine(const EdgeAcc& o) {
      if (per_edge.empty()) per_edge = o.per_edge;
      else
        for (size_t i = 0; i < per_edge.size(); ++i) per_edge[i].combine(o.per_edge[i]);
    }
  };

  EdgeAcc total = run_chunked<EdgeAcc>(trials, [&](long long t, EdgeAcc& a) {
    if (a.per_edge.empty()) a.per_edge.resize(edges.size());
    PrioritySample y = draw_priorities(inst.offline, seed, (uint64_t)t);
    OnlineRun run = inst.offline_weights ? vertex_weighted_run(inst, y, g) : ranking_run(inst, y);
    DualFit fit = dual_fit(inst, run, y, g, big_f);
    for (size_t i = 0; i < edges.size(); ++i)
      a.per_edge[i].add(fit.pi_offline[edges[i].left] + fit.pi_arrival[edges[i].right]);
  });
  if (total.per_edge.empty()) total.per_edge.resize(edges.size());

  std::vector<EdgeDualEstimate> out;
  out.reserve(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    EdgeDualEstimate e;
    e.offline = edges[i].left;
    e.arrival = edges[i].right;
    e.estimate = total.per_edge[i].mean(trials);
    e.std_error = total.per_edge[i].std_error(trials);
    double constraint =
        inst.offline_weights ? (*inst.offline_weights)[edges[i].left].to_double() : 1.0;
    e.flagged = e.estimate < constraint - 3.0 * e.std_error;
    out.push_back(e);
  }
  return out;
}

void AdwordsInstance::validate() const {
  for (const Rational& b : budgets)
    if (!(b > Rational(0))) throw std::invalid_argument("adwords: budgets must be positive");
  if (!(bid_fraction_cap > Rational(0)) || bid_fraction_cap > Rational(1))
    throw std::invalid_argument("adwords: bid fraction cap outside (0,1]");
  for (const auto& q : queries) {
    int prev = -1;
    for (const auto& [bidder, bid] : q) {
      if (bidder < 0 || bidder >= (int)budgets.size())
        throw std::invalid_argument("adwords: bidder index out of range");
      if (bidder <= prev) throw std::invalid_argument("adwords: bids must be sorted by bidder");
      prev = bidder;
      if (bid < Rational(0)) throw std::invalid_argument("adwords: negative bid");
      if (bid > budgets[bidder] * bid_fraction_cap)
        throw std::invalid_argument("adwords: bid exceeds budget * cap (small-bids regime)");
    }
  }
}

Rational AdwordsInstance::opt_upper_bound() const {
  Rational budget_sum;
  for (const Rational& b : budgets) budget_sum += b;
  Rational max_bid_sum;
  for (const auto& q : queries) {
    Rational best;
    for (const auto& [bidder, bid] : q)
      if (bid > best) best = bid;
    max_bid_sum += best;
  }
  return budget_sum < max_bid_sum ? budget_sum : max_bid_sum;
}

AdwordsRun adwords_run(const AdwordsInstance& inst) {
  inst.validate();
  AdwordsRun run;
  run.spent.assign(inst.budgets.size(), Rational(0));
  run.assignment.assign(inst.queries.size(), std::nullopt);
  for (int q = 0; q < (int)inst.queries.size(); ++q) {
    int best = -1;
    double best_score = 0.0;
    Rational best_bid;
    for (const auto& [bidder, bid] : inst.queries[q]) {
      if (bid.is_zero()) continue;
      if (run.spent[bidder] >= inst.budgets[bidder]) continue;
      double frac = (run.spent[bidder] / inst.budgets[bidder]).to_double();
      double score = bid.to_double() * (1.0 - std::exp(frac - 1.0));
      // ascending bidder order, so ties keep the lowest index
      if (best == -1 || score > best_score) {
        best = bidder;
        best_score = score;
        best_bid = bid;
      }
    }
    if (best == -1) continue;
    Rational remaining = inst.budgets[best] - run.spent[best];
    Rational charge = best_bid < remaining ? best_bid : remaining;
    run.spent[best] += charge;
    run.revenue += charge;
    run.assignment[q] = best;
  }
  return run;
}

}  // namespace matchpd
