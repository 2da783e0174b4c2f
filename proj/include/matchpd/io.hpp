#pragma once

#include <optional>
#include <string>

#include "matchpd/online.hpp"
#include "matchpd/solve.hpp"

namespace matchpd {

// Text and JSON surfaces. Rationals travel as "num/den" strings (plain "n"
// when integral) so certificates survive serialization exactly.

struct ParsedInstance {
  BipartiteInstance instance;
  // optional `w <l_index> <weight>` lines
  std::optional<std::vector<Rational>> left_vertex_weights;
};

// Header `p bpm <n_left> <n_right> <m>`, then `e <l> <r> <weight>` lines;
// `c` comment lines anywhere; optional `w <l> <weight>` lines. Weights are
// decimals or num/den rationals. Errors carry the offending line number.
ParsedInstance parse_instance_text(const std::string& text);
std::string print_instance_text(const ParsedInstance& inst);

OnlineInstance parse_online_json(const std::string& text);
std::string print_online_json(const OnlineInstance& inst);

AdwordsInstance parse_adwords_json(const std::string& text);
std::string print_adwords_json(const AdwordsInstance& inst);

struct ResultDocument {
  std::string problem;
  std::string algorithm;
  Matching matching;
  Rational value;
  Potential potential;
  CertificateReport certificate;
  SolveStats stats;
};

std::string print_result_json(const ResultDocument& doc, const BipartiteInstance& inst);
ResultDocument parse_result_json(const std::string& text, const BipartiteInstance& inst);

std::string print_ratio_json(const std::string& mode, const RatioEstimate& est);
std::string print_dual_check_json(const std::vector<EdgeDualEstimate>& report, long long trials,
                                  uint64_t seed);
std::string print_adwords_result_json(const AdwordsRun& run, const Rational& opt_bound);
std::string print_certificate_json(const CertificateReport& report);

// --- deterministic instance generators --------------------------------------

// n x n, each pair kept with probability 1/2, integer weights in [0, 10]
ParsedInstance gen_random_instance(int n, uint64_t seed);
// complete n x n with unit weights
ParsedInstance gen_complete_instance(int n);
// arrivals j = 0..n-1 with neighborhoods {0..j}: the adversarial RANKING family
OnlineInstance gen_upper_triangular(int n);
// n bidders with budget 100 each, 100*n queries, bids <= budget/50
AdwordsInstance gen_adwords_smallbids(int n, uint64_t seed);

}  // namespace matchpd
