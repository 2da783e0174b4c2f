// matchpd: exact bipartite matching solvers with primal-dual certificates,
// plus online-matching simulators. See README.md for file formats.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchpd/io.hpp"

namespace {

constexpr int kExitSolved = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCertificateRejected = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

int fail_input(const std::string& message) {
  nlohmann::json err{{"error", message}};
  std::cerr << err.dump() << "\n";
  return kExitInputError;
}

int run_solve(const std::string& problem_s, const std::string& algorithm_s,
              const std::string& input, const std::string& output) {
  auto problem = matchpd::problem_from_string(problem_s);
  if (!problem) return fail_input("unknown problem '" + problem_s + "'");
  auto algorithm = matchpd::algorithm_from_string(algorithm_s);
  if (!algorithm) return fail_input("unknown algorithm '" + algorithm_s + "'");
  if (*algorithm == matchpd::Algorithm::Naive &&
      *problem != matchpd::ProblemKind::MaxWeightMatching)
    return fail_input("the naive algorithm only solves --problem maxw");

  matchpd::ParsedInstance parsed = matchpd::parse_instance_text(read_file(input));
  matchpd::SolveOutcome outcome = matchpd::solve_problem(*problem, *algorithm, parsed.instance);
  if (outcome.infeasible) {
    nlohmann::json doc{{"problem", problem_s}, {"status", "infeasible"}};
    write_output(output, doc.dump(2) + "\n");
    return kExitInfeasible;
  }
  matchpd::ResultDocument doc{problem_s,        algorithm_s,         outcome.matching,
                              outcome.value,    outcome.potential,   outcome.certificate,
                              outcome.stats};
  write_output(output, matchpd::print_result_json(doc, parsed.instance));
  return kExitSolved;
}

int run_verify(const std::string& input, const std::string& result_path) {
  matchpd::ParsedInstance parsed = matchpd::parse_instance_text(read_file(input));
  matchpd::ResultDocument doc =
      matchpd::parse_result_json(read_file(result_path), parsed.instance);
  auto problem = matchpd::problem_from_string(doc.problem);
  if (!problem) return fail_input("result document has unknown problem '" + doc.problem + "'");

  // the stored value must match the matching recomputed against the instance
  matchpd::Rational value =
      matchpd::solution_value(*problem, parsed.instance, doc.matching);
  if (value != doc.value) return fail_input("result value does not match its matching");

  matchpd::CertificateReport report =
      matchpd::verify_solution(*problem, parsed.instance, doc.matching, doc.potential);
  std::cout << matchpd::print_certificate_json(report);
  return report.verdict ? kExitSolved : kExitCertificateRejected;
}

int run_online(const std::string& mode, const std::string& input, long long trials,
               uint64_t seed, const std::string& output) {
  if (mode == "adwords") {
    matchpd::AdwordsInstance inst = matchpd::parse_adwords_json(read_file(input));
    matchpd::AdwordsRun run = matchpd::adwords_run(inst);
    write_output(output, matchpd::print_adwords_result_json(run, inst.opt_upper_bound()));
    return kExitSolved;
  }
  matchpd::OnlineInstance inst = matchpd::parse_online_json(read_file(input));
  if (mode == "dual-check") {
    auto report = matchpd::expected_dual_feasibility_check(
        inst, matchpd::default_g, matchpd::default_big_f(), trials, seed);
    write_output(output, matchpd::print_dual_check_json(report, trials, seed));
    return kExitSolved;
  }
  if (mode == "vertex-weighted" && !inst.offline_weights)
    return fail_input("vertex-weighted mode needs offline_weights");
  if (mode == "ranking") inst.offline_weights.reset();  // cardinality objective
  matchpd::RatioEstimate est;
  try {
    est = matchpd::monte_carlo_ratio(inst, trials, seed);
  } catch (const std::invalid_argument& ex) {
    if (std::string(ex.what()).find("optimum is zero") != std::string::npos) {
      nlohmann::json err{{"error", "offline optimum is zero; ratio undefined"}};
      std::cerr << err.dump() << "\n";
      return kExitInfeasible;
    }
    throw;
  }
  write_output(output, matchpd::print_ratio_json(mode, est));
  return kExitSolved;
}

int run_gen(const std::string& family, int size, uint64_t seed, const std::string& output) {
  if (size < 1) return fail_input("--size must be >= 1");
  std::string content;
  if (family == "random") {
    content = matchpd::print_instance_text(matchpd::gen_random_instance(size, seed));
  } else if (family == "complete") {
    content = matchpd::print_instance_text(matchpd::gen_complete_instance(size));
  } else if (family == "upper-triangular") {
    content = matchpd::print_online_json(matchpd::gen_upper_triangular(size));
  } else if (family == "adwords-smallbids") {
    content = matchpd::print_adwords_json(matchpd::gen_adwords_smallbids(size, seed));
  } else {
    return fail_input("unknown family '" + family + "'");
  }
  write_output(output, content);
  return kExitSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matchpd: primal-dual bipartite matching toolkit"};
  app.require_subcommand(1);

  std::string problem, algorithm = "hungarian", input, output, result_path, mode, family;
  long long trials = 10000;
  uint64_t seed = 1;
  int size = 1;

  CLI::App* solve = app.add_subcommand("solve", "solve an offline matching problem");
  solve->add_option("--problem", problem, "maxw|minperfect|maxcard|maxwperfect|minwmaxcard")
      ->required();
  solve->add_option("--algorithm", algorithm, "naive|hungarian (default hungarian)");
  solve->add_option("--input", input, "instance file (text format)")->required();
  solve->add_option("--output", output, "result JSON path (default stdout)");

  CLI::App* verify = app.add_subcommand("verify", "recheck a result certificate from scratch");
  verify->add_option("--input", input, "instance file")->required();
  verify->add_option("--result", result_path, "result JSON")->required();

  CLI::App* online = app.add_subcommand("online", "online matching simulators");
  online->add_option("--mode", mode, "ranking|vertex-weighted|adwords|dual-check")->required();
  online->add_option("--input", input, "online/adwords instance JSON")->required();
  online->add_option("--trials", trials, "Monte Carlo trials (default 10000)");
  online->add_option("--seed", seed, "RNG seed (default 1)");
  online->add_option("--output", output, "output path (default stdout)");

  CLI::App* gen = app.add_subcommand("gen", "generate instance files");
  gen->add_option("--family", family, "random|complete|upper-triangular|adwords-smallbids")
      ->required();
  gen->add_option("--size", size, "instance size parameter")->required();
  gen->add_option("--seed", seed, "generator seed (default 1)");
  gen->add_option("--output", output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return run_solve(problem, algorithm, input, output);
    if (verify->parsed()) return run_verify(input, result_path);
    if (online->parsed()) {
      if (trials < 1) return fail_input("--trials must be >= 1");
      return run_online(mode, input, trials, seed, output);
    }
    if (gen->parsed()) return run_gen(family, size, seed, output);
  } catch (const std::exception& ex) {
    return fail_input(ex.what());
  }
  return kExitInputError;
}
