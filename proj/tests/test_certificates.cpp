#include <doctest.h>

#include "matchpd/certificates.hpp"
#include "matchpd/hungarian.hpp"
#include "matchpd/naive_pd.hpp"
#include "matchpd/oracle.hpp"
#include "support.hpp"

using namespace matchpd;
using test::g1;
using test::make_potential;

TEST_CASE("max-weight certificate on the running example") {
  BipartiteInstance inst = g1();
  auto ok = check_max_weight_certificate(inst, Matching({{0, 0}, {1, 1}}),
                                         make_potential({1, 3}, {0, 1}));
  CHECK(ok.verdict);

  auto bad = check_max_weight_certificate(inst, Matching({{0, 1}}),
                                          make_potential({2, 4}, {0, 0}));
  CHECK_FALSE(bad.verdict);
  CHECK(bad.failed_condition == CertificateFailure::UnmatchedNonzeroVertex);
  REQUIRE(bad.witness.has_value());
  CHECK(std::get<VertexId>(*bad.witness) == left_vertex(1));

  BipartiteInstance empty(1, 1, {}, {});
  CHECK(check_max_weight_certificate(empty, Matching{}, make_potential({0}, {0})).verdict);
}

TEST_CASE("max-weight certificate failure order") {
  BipartiteInstance inst = g1();
  // not a matching comes first
  auto r1 = check_max_weight_certificate(inst, Matching({{0, 0}, {0, 1}}),
                                         make_potential({-1, 0}, {0, 0}));
  CHECK(r1.failed_condition == CertificateFailure::NotMatching);
  // then dual feasibility (negative entry)
  auto r2 = check_max_weight_certificate(inst, Matching{}, make_potential({-1, 9}, {9, 9}));
  CHECK(r2.failed_condition == CertificateFailure::DualInfeasible);
  CHECK(std::get<VertexId>(*r2.witness) == left_vertex(0));
  // then a violated edge constraint
  auto r3 = check_max_weight_certificate(inst, Matching{}, make_potential({0, 0}, {0, 0}));
  CHECK(r3.failed_condition == CertificateFailure::DualInfeasible);
  CHECK(std::get<Edge>(*r3.witness) == Edge{0, 0});
  // then untight matched edges
  auto r4 = check_max_weight_certificate(inst, Matching({{0, 0}, {1, 1}}),
                                         make_potential({2, 4}, {0, 0}));
  CHECK(r4.failed_condition == CertificateFailure::UntightMatchedEdge);
  CHECK(std::get<Edge>(*r4.witness) == Edge{0, 0});
}

TEST_CASE("min-perfect certificate on the running example") {
  BipartiteInstance inst = g1();
  Matching perfect({{0, 1}, {1, 0}});
  Potential pi = make_potential({1, 2}, {0, 1});
  auto ok = check_min_perfect_certificate(inst, perfect, pi);
  CHECK(ok.verdict);
  CHECK(perfect.weight(inst) == pi.total());  // both 4

  // the weight-5 matching cannot be certified: this pi leaves l1r1 untight
  auto untight = check_min_perfect_certificate(inst, Matching({{0, 0}, {1, 1}}),
                                               make_potential({1, 2}, {0, 0}));
  CHECK_FALSE(untight.verdict);
  CHECK(untight.failed_condition == CertificateFailure::UntightMatchedEdge);
  CHECK(std::get<Edge>(*untight.witness) == Edge{1, 1});

  auto partial = check_min_perfect_certificate(inst, Matching({{0, 1}}),
                                               make_potential({1, 2}, {0, 1}));
  CHECK_FALSE(partial.verdict);
  CHECK(partial.failed_condition == CertificateFailure::NotPerfect);
}

TEST_CASE("unbounded ray checks") {
  BipartiteInstance inst = g1();
  CHECK_FALSE(check_unbounded_ray(inst, make_potential({0, 0}, {0, 0}),
                                  make_potential({0, 0}, {0, 0})));  // 1^T d = 0

  // isolated left vertex: d = +1 there is unconstrained
  BipartiteInstance iso(1, 1, {}, {});
  CHECK(check_unbounded_ray(iso, make_potential({0}, {0}), make_potential({1}, {0})));

  // 2x1 complete, zero weights
  BipartiteInstance two_one(2, 1, {{0, 0}, {1, 0}}, {Rational(0), Rational(0)});
  CHECK(check_unbounded_ray(two_one, make_potential({0, 0}, {0}),
                            make_potential({1, 1}, {-1})));
  // direction that would leave feasibility is rejected
  CHECK_FALSE(check_unbounded_ray(two_one, make_potential({0, 0}, {0}),
                                  make_potential({1, 1}, {0})));
  // mp-infeasible starting point is rejected
  CHECK_FALSE(check_unbounded_ray(two_one, make_potential({1, 1}, {0}),
                                  make_potential({1, 1}, {-1})));
}

TEST_CASE("accepted rays stay mp-feasible along the ray") {
  BipartiteInstance two_one(2, 1, {{0, 0}, {1, 0}}, {Rational(0), Rational(0)});
  Potential pi = make_potential({0, 0}, {0});
  Potential d = make_potential({1, 1}, {-1});
  REQUIRE(check_unbounded_ray(two_one, pi, d));
  for (long long t : {1LL, 1000000LL}) {
    Potential shifted = pi;
    for (int i = 0; i < 2; ++i) shifted.left[i] += Rational(t) * d.left[i];
    shifted.right[0] += Rational(t) * d.right[0];
    CHECK(is_mp_feasible(two_one, shifted));
  }
}

TEST_CASE("certificate soundness against the oracle") {
  Rng rng(101);
  int max_checked = 0, min_checked = 0;
  for (int it = 0; it < 250; ++it) {
    BipartiteInstance inst = test::random_instance(rng, 1 + (int)rng.uniform_int(0, 3),
                                                   1 + (int)rng.uniform_int(0, 3), 60, 0, 9);
    NaiveResult res = naive_solve(inst);
    auto report = check_max_weight_certificate(inst, res.matching, res.final_potential);
    REQUIRE(report.verdict);
    auto brute = brute_optimum(ProblemKind::MaxWeightMatching, inst);
    CHECK(res.matching.weight(inst) == brute->value);
    ++max_checked;
  }
  for (int it = 0; it < 250; ++it) {
    int n = 2 + (int)rng.uniform_int(0, 2);
    BipartiteInstance inst = test::random_complete(rng, n, -9, 9);
    auto outcome = hungarian_solve(inst);
    REQUIRE(std::holds_alternative<HungarianSolution>(outcome));
    const auto& sol = std::get<HungarianSolution>(outcome);
    auto report = check_min_perfect_certificate(inst, sol.matching, sol.potential);
    REQUIRE(report.verdict);
    auto brute = brute_optimum(ProblemKind::MinWeightPerfect, inst, EnumerationBudget{12, 36});
    CHECK(sol.matching.weight(inst) == brute->value);
    ++min_checked;
  }
  CHECK(max_checked == 250);
  CHECK(min_checked == 250);
}
