#include <doctest.h>

#include "matchpd/oracle.hpp"
#include "support.hpp"

using namespace matchpd;
using test::g1;

namespace {

// independent count: include/exclude the first edge, recursing on the rest
long long count_matchings(const std::vector<Edge>& edges, std::vector<Edge> chosen) {
  if (edges.empty()) return 1;
  std::vector<Edge> rest(edges.begin() + 1, edges.end());
  long long total = count_matchings(rest, chosen);
  const Edge& e = edges.front();
  bool clashes = false;
  for (const Edge& c : chosen)
    if (c.left == e.left || c.right == e.right) clashes = true;
  if (!clashes) {
    chosen.push_back(e);
    total += count_matchings(rest, chosen);
  }
  return total;
}

}  // namespace

TEST_CASE("enumerate matchings") {
  BipartiteInstance single(1, 1, {{0, 0}}, {Rational(1)});
  auto ms = all_matchings(single);
  REQUIRE(ms.size() == 2);
  CHECK(ms[0].size() == 0);
  CHECK(ms[1].edges == std::vector<Edge>{{0, 0}});

  // the running example has 7 matchings: empty, 4 singletons, 2 pairs
  CHECK(all_matchings(g1()).size() == 7);

  BipartiteInstance edgeless(2, 2, {}, {});
  CHECK(all_matchings(edgeless).size() == 1);
}

TEST_CASE("enumeration count matches the independent recursion") {
  Rng rng(3);
  for (int it = 0; it < 40; ++it) {
    BipartiteInstance inst = test::random_instance(rng, 1 + (int)rng.uniform_int(0, 4),
                                                   1 + (int)rng.uniform_int(0, 4), 50, 1, 3);
    if ((int)inst.edges().size() > 24) continue;
    CHECK((long long)all_matchings(inst).size() == count_matchings(inst.edges(), {}));
  }
}

TEST_CASE("matchings enumerate exactly once") {
  auto ms = all_matchings(g1());
  for (size_t i = 0; i < ms.size(); ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) CHECK(ms[i].edges != ms[j].edges);
}

TEST_CASE("brute optimum") {
  BipartiteInstance inst = g1();
  auto maxw = brute_optimum(ProblemKind::MaxWeightMatching, inst);
  REQUIRE(maxw.has_value());
  CHECK(maxw->value == Rational(5));
  CHECK(maxw->witness.edges == std::vector<Edge>{{0, 0}, {1, 1}});

  auto minp = brute_optimum(ProblemKind::MinWeightPerfect, inst);
  REQUIRE(minp.has_value());
  CHECK(minp->value == Rational(4));
  CHECK(minp->witness.edges == std::vector<Edge>{{0, 1}, {1, 0}});

  // no perfect matching: star through l0
  BipartiteInstance star(2, 2, {{0, 0}, {0, 1}}, {Rational(1), Rational(1)});
  CHECK_FALSE(brute_optimum(ProblemKind::MinWeightPerfect, star).has_value());
  CHECK_FALSE(brute_optimum(ProblemKind::MaxWeightPerfect, star).has_value());

  auto card = brute_optimum(ProblemKind::MaxCardinality, star);
  CHECK(card->value == Rational(1));

  BipartiteInstance tie(2, 2, {{0, 0}, {0, 1}, {1, 0}, {1, 1}},
                        {Rational(5), Rational(1), Rational(1), Rational(5)});
  auto mwmc = brute_optimum(ProblemKind::MinWeightMaxCardinality, tie);
  CHECK(mwmc->value == Rational(2));  // both cross edges
  CHECK(mwmc->witness.size() == 2);
}

TEST_CASE("budget is enforced") {
  Rng rng(1);
  BipartiteInstance big = test::random_complete(rng, 4, 0, 1);
  CHECK_THROWS_AS(all_matchings(big, EnumerationBudget{12, 10}), std::invalid_argument);
  CHECK_THROWS_AS(brute_optimum(ProblemKind::MaxCardinality, big, EnumerationBudget{6, 24}),
                  std::invalid_argument);
}
