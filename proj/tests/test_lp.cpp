#include <doctest.h>

#include "matchpd/certificates.hpp"
#include "matchpd/lp.hpp"
#include "matchpd/naive_pd.hpp"
#include "support.hpp"

using namespace matchpd;
using test::g1;
using test::make_potential;

namespace {

DenseVector vec(std::vector<long long> vs) {
  DenseVector out(vs.size());
  for (size_t i = 0; i < vs.size(); ++i) out[i] = Rational(vs[i]);
  return out;
}

}  // namespace

TEST_CASE("incidence matrix") {
  BipartiteInstance single(1, 1, {{0, 0}}, {Rational(3)});
  DenseMatrix a = incidence_matrix(single);
  CHECK(a.rows == 2);
  CHECK(a.cols == 1);
  CHECK(a.at(0, 0) == Rational(1));
  CHECK(a.at(1, 0) == Rational(1));

  DenseMatrix a1 = incidence_matrix(g1());
  CHECK(a1.rows == 4);
  CHECK(a1.cols == 4);
  for (int c = 0; c < 4; ++c) {
    int ones = 0;
    for (int r = 0; r < 4; ++r)
      if (a1.at(r, c) == Rational(1)) ++ones;
    CHECK(ones == 2);
  }

  BipartiteInstance empty(2, 1, {}, {});
  DenseMatrix a2 = incidence_matrix(empty);
  CHECK(a2.rows == 3);
  CHECK(a2.cols == 0);
}

TEST_CASE("matching and potential embeddings") {
  BipartiteInstance inst = g1();
  CHECK(matching_to_primal(inst, Matching{}) == vec({0, 0, 0, 0}));
  CHECK(matching_to_primal(inst, Matching({{0, 0}, {1, 1}})) == vec({1, 0, 0, 1}));
  CHECK(matching_to_primal(inst, Matching({{0, 1}})) == vec({0, 1, 0, 0}));
  CHECK_THROWS_AS(matching_to_primal(inst, Matching({{0, 0}, {0, 1}})), std::invalid_argument);

  CHECK(potential_to_dual(inst, make_potential({0, 0}, {0, 0})) == vec({0, 0, 0, 0}));
  CHECK(potential_to_dual(inst, make_potential({2, 4}, {0, 0})) == vec({2, 4, 0, 0}));
  CHECK(potential_to_dual(inst, make_potential({1, 3}, {0, 1})) == vec({1, 3, 0, 1}));
}

TEST_CASE("feasibility checks") {
  BipartiteInstance inst = g1();
  LpPair packing = max_packing_lp(inst);
  LpPair perfect = min_perfect_lp(inst);

  CHECK(check_feasible(packing, LpSide::Primal, vec({0, 0, 0, 0})));
  CHECK(check_feasible(packing, LpSide::Primal, vec({1, 0, 0, 1})));
  CHECK_FALSE(check_feasible(packing, LpSide::Primal, vec({1, 1, 0, 0})));  // row l0 = 2
  CHECK(check_feasible(packing, LpSide::Dual, vec({2, 4, 0, 0})));
  CHECK_FALSE(check_feasible(packing, LpSide::Dual, vec({0, 0, 0, 0})));

  CHECK(check_feasible(perfect, LpSide::Primal, vec({1, 0, 0, 1})));
  CHECK_FALSE(check_feasible(perfect, LpSide::Primal, vec({1, 0, 0, 0})));  // not perfect
  CHECK(check_feasible(perfect, LpSide::Dual, vec({1, 2, 0, 0})));
  // negative entries allowed on the min-perfect dual
  CHECK(check_feasible(perfect, LpSide::Dual, vec({-1, 0, 0, 0})));
  CHECK_FALSE(check_feasible(perfect, LpSide::Dual, vec({2, 2, 0, 0})));  // l0r0: 2 > 1

  CHECK_THROWS_AS(check_feasible(packing, LpSide::Primal, vec({0})), std::invalid_argument);
}

TEST_CASE("duality gap") {
  BipartiteInstance inst = g1();
  LpPair packing = max_packing_lp(inst);
  CHECK(duality_gap(packing, vec({0, 0, 0, 0}), vec({2, 4, 0, 0})) == Rational(6));
  CHECK(duality_gap(packing, vec({1, 0, 0, 1}), vec({1, 3, 0, 1})) == Rational(0));

  LpPair perfect = min_perfect_lp(inst);
  CHECK(duality_gap(perfect, vec({0, 1, 1, 0}), vec({1, 2, 0, 0})) == Rational(1));  // 4 - 3

  CHECK_THROWS_AS(duality_gap(packing, vec({1, 1, 1, 1}), vec({2, 4, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("complementary slackness") {
  BipartiteInstance inst = g1();
  LpPair packing = max_packing_lp(inst);

  // all-zero pair on an edgeless instance
  BipartiteInstance empty(1, 1, {}, {});
  LpPair packing0 = max_packing_lp(empty);
  CHECK(cs_check(packing0, DenseVector(0), vec({0, 0}), Rational(0)));

  CHECK(cs_check(packing, vec({1, 0, 0, 1}), vec({1, 3, 0, 1}), Rational(0)));
  CHECK_FALSE(cs_check(packing, vec({0, 1, 0, 0}), vec({2, 4, 0, 0}), Rational(0)));

  LpPair perfect = min_perfect_lp(inst);
  CHECK(cs_check(perfect, vec({0, 1, 1, 0}), vec({2, 3, -1, 0}), Rational(0)));

  CHECK_THROWS_AS(cs_check(packing, vec({0, 0, 0, 0}), vec({2, 4, 0, 0}), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cs_check(packing, vec({0, 0, 0, 0}), vec({2, 4, 0, 0}), Rational(-1, 2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(cs_check(perfect, vec({0, 1, 1, 0}), vec({1, 3, -1, 0}), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("delta-scaled CS follows the scaled row term") {
  BipartiteInstance single(1, 1, {{0, 0}}, {Rational(2)});
  LpPair lp = max_packing_lp(single);
  DenseVector x(1);
  x[0] = Rational(1);
  DenseVector y = vec({2, 0});
  CHECK(cs_check(lp, x, y, Rational(0)));
  // scaling by (1-delta) breaks the row equality for the same tight pair:
  // ((1/2) * 1 - 1) * 2 != 0
  CHECK_FALSE(cs_check(lp, x, y, Rational(1, 2)));
  // the all-zero pair satisfies every delta (zero weight keeps y = 0 feasible)
  BipartiteInstance zero_w(1, 1, {{0, 0}}, {Rational(0)});
  LpPair lp0 = max_packing_lp(zero_w);
  CHECK(cs_check(lp0, DenseVector(1), vec({0, 0}), Rational(1, 2)));
  CHECK(cs_check(lp0, DenseVector(1), vec({0, 0}), Rational(0)));
  DenseVector x_half(1);
  x_half[0] = Rational(1, 2);
  CHECK_FALSE(cs_check(lp, x_half, y, Rational(0)));
}

TEST_CASE("weak duality quantified over random feasible pairs") {
  Rng rng(5);
  for (int it = 0; it < 400; ++it) {
    BipartiteInstance inst = test::random_instance(rng, 1 + (int)rng.uniform_int(0, 5),
                                                   1 + (int)rng.uniform_int(0, 5), 50, 0, 9);
    LpPair packing = max_packing_lp(inst);
    // fractional primal: a random value in [0,1] divided by the larger
    // endpoint degree keeps every row of Ax at or below 1
    DenseVector x(inst.edges().size());
    for (size_t j = 0; j < x.size(); ++j) {
      const Edge& e = inst.edges()[j];
      int deg = std::max((int)inst.incident(left_vertex(e.left)).size(),
                         (int)inst.incident(right_vertex(e.right)).size());
      x[j] = Rational(rng.uniform_int(0, 12), 12) / Rational(deg);
    }
    DenseVector y = potential_to_dual(inst, test::random_feasible_potential(rng, inst));
    REQUIRE(check_feasible(packing, LpSide::Primal, x));
    REQUIRE(check_feasible(packing, LpSide::Dual, y));
    CHECK(duality_gap(packing, x, y) >= Rational(0));
  }
}

TEST_CASE("cs_check true implies zero gap on solver outputs") {
  Rng rng(17);
  int confirmed = 0;
  for (int it = 0; it < 150; ++it) {
    BipartiteInstance inst = test::random_instance(rng, 1 + (int)rng.uniform_int(0, 4),
                                                   1 + (int)rng.uniform_int(0, 4), 60, 0, 8);
    NaiveResult res = naive_solve(inst);
    LpPair packing = max_packing_lp(inst);
    DenseVector x = matching_to_primal(inst, res.matching);
    DenseVector y = potential_to_dual(inst, res.final_potential);
    REQUIRE(cs_check(packing, x, y, Rational(0)));
    CHECK(duality_gap(packing, x, y) == Rational(0));
    ++confirmed;
  }
  CHECK(confirmed == 150);
}

TEST_CASE("embedding feasibility mirrors graph-side predicates") {
  Rng rng(23);
  for (int it = 0; it < 200; ++it) {
    BipartiteInstance inst = test::random_instance(rng, 3, 3, 50, 0, 6);
    LpPair packing = max_packing_lp(inst);
    LpPair perfect = min_perfect_lp(inst);

    // arbitrary edge subsets: primal-feasible iff a matching
    std::vector<Edge> subset;
    for (const Edge& e : inst.edges())
      if (rng.bernoulli(0.4)) subset.push_back(e);
    DenseVector x(inst.edges().size());
    for (size_t j = 0; j < x.size(); ++j)
      for (const Edge& e : subset)
        if (inst.edges()[j] == e) x[j] = Rational(1);
    bool disjoint = true;
    {
      std::vector<bool> ul(3, false), ur(3, false);
      for (const Edge& e : subset) {
        if (ul[e.left] || ur[e.right]) disjoint = false;
        ul[e.left] = true;
        ur[e.right] = true;
      }
    }
    CHECK(check_feasible(packing, LpSide::Primal, x) == disjoint);

    // random potentials: dual-feasible iff the graph-side predicate agrees
    Potential pi(3, 3);
    for (int i = 0; i < 3; ++i) {
      pi.left[i] = Rational(rng.uniform_int(-2, 8));
      pi.right[i] = Rational(rng.uniform_int(-2, 8));
    }
    DenseVector y = potential_to_dual(inst, pi);
    CHECK(check_feasible(packing, LpSide::Dual, y) == is_feasible_potential(inst, pi));
    CHECK(check_feasible(perfect, LpSide::Dual, y) == is_mp_feasible(inst, pi));
  }
}
