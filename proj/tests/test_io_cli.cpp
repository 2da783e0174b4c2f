#include <doctest.h>

#include "matchpd/io.hpp"
#include "support.hpp"

using namespace matchpd;

TEST_CASE("instance text parsing") {
  std::string text =
      "c the running example\n"
      "p bpm 2 2 4\n"
      "e 0 0 1\n"
      "e 0 1 2\n"
      "e 1 0 2\n"
      "e 1 1 4\n";
  ParsedInstance parsed = parse_instance_text(text);
  CHECK(parsed.instance.n_left() == 2);
  CHECK(parsed.instance.edges().size() == 4);
  CHECK(parsed.instance.weight(Edge{1, 1}) == Rational(4));
  CHECK_FALSE(parsed.left_vertex_weights.has_value());

  ParsedInstance with_w = parse_instance_text("p bpm 1 1 1\ne 0 0 3/2\nw 0 2.5\n");
  CHECK(with_w.instance.weight(Edge{0, 0}) == Rational(3, 2));
  REQUIRE(with_w.left_vertex_weights.has_value());
  CHECK((*with_w.left_vertex_weights)[0] == Rational(5, 2));
}

TEST_CASE("instance text parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, const std::string& fragment) {
    try {
      parse_instance_text(text);
      FAIL("expected parse error");
    } catch (const std::runtime_error& ex) {
      CHECK(std::string(ex.what()).find(fragment) != std::string::npos);
    }
  };
  expect_line("e 0 0 1\n", "line 1");
  expect_line("p bpm 1 1 1\ne 0 5 1\n", "line 2");
  expect_line("p bpm 1 1 2\ne 0 0 1\ne 0 0 2\n", "line 3");
  expect_line("p bpm 1 1 1\ne 0 0 abc\n", "line 2");
  expect_line("p bpm 1 1 2\ne 0 0 1\n", "mismatch");
  expect_line("p bpm 1 1 0\nz 1\n", "line 2");
}

TEST_CASE("instance round trip") {
  Rng rng(91);
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    ParsedInstance gen = gen_random_instance(3 + (int)(seed % 4), seed);
    std::string text = print_instance_text(gen);
    ParsedInstance back = parse_instance_text(text);
    CHECK(back.instance.n_left() == gen.instance.n_left());
    CHECK(back.instance.edges() == gen.instance.edges());
    CHECK(back.instance.weights() == gen.instance.weights());
    CHECK(print_instance_text(back) == text);
  }
}

TEST_CASE("online json round trip") {
  OnlineInstance u3 = gen_upper_triangular(3);
  CHECK(u3.arrivals == std::vector<std::vector<int>>{{0, 1, 2}, {0, 1}, {0}});
  std::string text = print_online_json(u3);
  OnlineInstance back = parse_online_json(text);
  CHECK(back.offline == 3);
  CHECK(back.arrivals == u3.arrivals);
  CHECK(print_online_json(back) == text);

  OnlineInstance weighted = u3;
  weighted.offline_weights = {{Rational(1), Rational(3, 2), Rational(2)}};
  OnlineInstance wback = parse_online_json(print_online_json(weighted));
  CHECK(wback.offline_weights == weighted.offline_weights);

  CHECK_THROWS_AS(parse_online_json("{"), std::runtime_error);
  CHECK_THROWS_AS(parse_online_json("{\"offline\": 1, \"arrivals\": [[5]]}"),
                  std::invalid_argument);
}

TEST_CASE("adwords json round trip") {
  AdwordsInstance inst = gen_adwords_smallbids(4, 7);
  std::string text = print_adwords_json(inst);
  AdwordsInstance back = parse_adwords_json(text);
  CHECK(back.budgets == inst.budgets);
  CHECK(back.queries == inst.queries);
  CHECK(print_adwords_json(back) == text);
  CHECK_THROWS_AS(parse_adwords_json("{\"budgets\": [10], \"queries\": "
                                     "[{\"bids\": {\"0\": \"5\"}}]}"),
                  std::invalid_argument);  // bid above budget/50
}

TEST_CASE("result document round trip and verification") {
  BipartiteInstance inst = test::g1();
  SolveOutcome outcome =
      solve_problem(ProblemKind::MaxWeightMatching, Algorithm::Naive, inst);
  ResultDocument doc{"maxw",          "naive",         outcome.matching, outcome.value,
                     outcome.potential, outcome.certificate, outcome.stats};
  std::string text = print_result_json(doc, inst);
  ResultDocument back = parse_result_json(text, inst);
  CHECK(back.matching.edges == outcome.matching.edges);
  CHECK(back.value == outcome.value);
  CHECK(back.potential == outcome.potential);
  CHECK(verify_solution(ProblemKind::MaxWeightMatching, inst, back.matching, back.potential)
            .verdict);
  // a perturbed potential no longer verifies
  Potential tampered = back.potential;
  tampered.left[0] += Rational(1);
  CHECK_FALSE(
      verify_solution(ProblemKind::MaxWeightMatching, inst, back.matching, tampered).verdict);
}

TEST_CASE("solver facade covers every problem and certificate scheme") {
  Rng rng(93);
  for (ProblemKind problem :
       {ProblemKind::MaxWeightMatching, ProblemKind::MaxWeightPerfect,
        ProblemKind::MinWeightPerfect, ProblemKind::MaxCardinality,
        ProblemKind::MinWeightMaxCardinality}) {
    bool perfect =
        problem == ProblemKind::MaxWeightPerfect || problem == ProblemKind::MinWeightPerfect;
    int solved = 0;
    for (int it = 0; it < 60; ++it) {
      int nl = 1 + (int)rng.uniform_int(0, 3);
      int nr = perfect ? nl : 1 + (int)rng.uniform_int(0, 3);
      int lo = problem == ProblemKind::MaxWeightMatching ? 0 : -6;
      BipartiteInstance inst = test::random_instance(rng, nl, nr, perfect ? 85 : 60, lo, 8);
      SolveOutcome outcome = solve_problem(problem, Algorithm::Hungarian, inst);
      if (outcome.infeasible) {
        CHECK_FALSE(brute_optimum(problem, inst).has_value());
        continue;
      }
      ++solved;
      CHECK(outcome.certificate.verdict);
      CHECK(outcome.value == brute_optimum(problem, inst)->value);
      CHECK(verify_solution(problem, inst, outcome.matching, outcome.potential).verdict);
    }
    CHECK(solved > 10);
  }
}

TEST_CASE("naive is rejected outside maxw") {
  CHECK_THROWS_AS(
      solve_problem(ProblemKind::MinWeightPerfect, Algorithm::Naive, test::g1()),
      std::invalid_argument);
}

TEST_CASE("generators are deterministic") {
  CHECK(print_instance_text(gen_random_instance(5, 11)) ==
        print_instance_text(gen_random_instance(5, 11)));
  CHECK(print_instance_text(gen_random_instance(5, 11)) !=
        print_instance_text(gen_random_instance(5, 12)));
  CHECK(print_adwords_json(gen_adwords_smallbids(5, 3)) ==
        print_adwords_json(gen_adwords_smallbids(5, 3)));
  ParsedInstance complete = gen_complete_instance(2);
  CHECK(complete.instance.edges().size() == 4);
  for (const Rational& w : complete.instance.weights()) CHECK(w == Rational(1));
}
