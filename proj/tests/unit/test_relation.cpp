#include <gtest/gtest.h>

#include <random>

#include "flpdl/algebra_search.hpp"
#include "flpdl/relation.hpp"
#include "oracles.hpp"

using namespace flpdl;

namespace {

XRelation random_relation(std::mt19937_64& rng, const AlgebraPtr& alg, std::size_t n) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(alg->size()) - 1);
  std::vector<Elem> v(n * n);
  for (auto& e : v) e = static_cast<Elem>(pick(rng));
  return XRelation(alg, n, v);
}

std::vector<AlgebraPtr> algebras() {
  return {bool2(), cost_chain(3), cost_chain(4), product(*bool2(), *cost_chain(3))};
}

}  // namespace

TEST(Relation, UnionExamples) {
  auto c3 = cost_chain(3);
  XRelation r(c3, 2, {1, 2, 2, 2});
  XRelation q(c3, 2, {2, 2, 2, 0});
  const auto u = rel_union(r, q);
  EXPECT_EQ(u(0, 0), 1);
  EXPECT_EQ(u(1, 1), 0);
  EXPECT_EQ(rel_union(r, r), r);
  EXPECT_EQ(rel_union(r, XRelation(c3, 2)), r);
}

TEST(Relation, ComposeCostFour) {
  auto c4 = cost_chain(4);
  XRelation r(c4, 3), q(c4, 3);
  std::vector<Elem> rv(9, 3), qv(9, 3);
  rv[0 * 3 + 1] = 1;
  qv[1 * 3 + 2] = 1;
  const auto rq = rel_compose(XRelation(c4, 3, rv), XRelation(c4, 3, qv));
  EXPECT_EQ(rq(0, 2), 2);
  EXPECT_EQ(rq(0, 0), 3);
}

TEST(Relation, ClosureCostFourChain) {
  auto c4 = cost_chain(4);
  std::vector<Elem> v(9, 3);
  v[0 * 3 + 1] = 1;
  v[1 * 3 + 2] = 1;
  const auto plus = transitive_closure(XRelation(c4, 3, v));
  EXPECT_EQ(plus(0, 2), 2);
  EXPECT_EQ(plus(0, 1), 1);
  EXPECT_EQ(plus(2, 0), 3);
}

TEST(Relation, IdentityIsUnitOfComposition) {
  std::mt19937_64 rng(7);
  for (const auto& alg : algebras()) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto r = random_relation(rng, alg, n);
      const auto id = XRelation::identity(alg, n);
      EXPECT_EQ(rel_compose(id, r), r);
      EXPECT_EQ(rel_compose(r, id), r);
    }
  }
}

TEST(Relation, BooleanAgreesWithClassical) {
  std::mt19937_64 rng(11);
  auto b = bool2();
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 1 + round % 5;
    const auto r = random_relation(rng, b, n);
    const auto q = random_relation(rng, b, n);
    oracle::BoolRel rs, qs;
    for (State s = 0; s < n; ++s)
      for (State t = 0; t < n; ++t) {
        if (r(s, t)) rs.insert({s, t});
        if (q(s, t)) qs.insert({s, t});
      }
    oracle::BoolRel comp;
    for (auto [s, x] : rs)
      for (auto [y, t] : qs)
        if (x == y) comp.insert({s, t});
    const auto plus = oracle::warshall(rs, n);
    const auto rq = rel_compose(r, q);
    const auto rp = transitive_closure(r);
    for (State s = 0; s < n; ++s) {
      for (State t = 0; t < n; ++t) {
        EXPECT_EQ(rq(s, t) == 1, comp.count({s, t}) == 1);
        EXPECT_EQ(rp(s, t) == 1, plus.count({s, t}) == 1);
      }
    }
  }
}

TEST(Relation, ClosureMatchesPathJoins) {
  std::mt19937_64 rng(13);
  for (const auto& alg : algebras()) {
    for (int round = 0; round < 20; ++round) {
      const std::size_t n = 1 + round % 3;
      const auto r = random_relation(rng, alg, n);
      const auto plus = transitive_closure(r);
      // all four algebras are integral, so cycles never raise a path's value
      // and the cap of 6 still covers every simple path
      const std::size_t max_len = n * alg->size();
      for (State s = 0; s < n; ++s)
        for (State t = 0; t < n; ++t) EXPECT_EQ(plus(s, t), oracle::path_join(r, s, t, std::min<std::size_t>(max_len, 6)));
    }
  }
}

TEST(Relation, ClosureProperties) {
  std::mt19937_64 rng(17);
  for (const auto& alg : algebras()) {
    for (int round = 0; round < 40; ++round) {
      const std::size_t n = 1 + round % 5;
      const auto r = random_relation(rng, alg, n);
      const auto plus = transitive_closure(r);
      EXPECT_TRUE(r.leq(plus));
      EXPECT_TRUE(oracle::is_transitive_by_definition(plus));
      EXPECT_TRUE(plus.is_transitive());
      EXPECT_EQ(transitive_closure(plus), plus);
      // monotone: R <= R u Q gives R+ <= (R u Q)+
      const auto q = random_relation(rng, alg, n);
      EXPECT_TRUE(plus.leq(transitive_closure(rel_union(r, q))));
    }
  }
}

TEST(Relation, ReflexiveTransitiveClosure) {
  std::mt19937_64 rng(19);
  for (const auto& alg : algebras()) {
    EXPECT_EQ(refl_trans_closure(XRelation(alg, 3)), XRelation::identity(alg, 3));
    for (int round = 0; round < 30; ++round) {
      const std::size_t n = 1 + round % 4;
      const auto r = random_relation(rng, alg, n);
      const auto star = refl_trans_closure(r);
      EXPECT_TRUE(star.is_reflexive());
      EXPECT_TRUE(oracle::is_transitive_by_definition(star));
      // integral: R* = Id u R+
      EXPECT_EQ(star, rel_union(XRelation::identity(alg, n), transitive_closure(r)));
    }
  }
}

TEST(Relation, StarNeedsIntegrality) {
  auto ni = find_non_integral(4);
  ASSERT_TRUE(ni);
  bool gap = false;
  for (Elem e = 0; e < ni->size() && !gap; ++e) {
    const XRelation r(ni, 1, {e});
    const auto star = refl_trans_closure(r);
    EXPECT_EQ(star(0, 0), ni->one());
    const auto id_plus = rel_union(XRelation::identity(ni, 1), transitive_closure(r));
    gap = id_plus(0, 0) != ni->one();
  }
  EXPECT_TRUE(gap);
}

TEST(Relation, Errors) {
  auto b = bool2();
  EXPECT_THROW(rel_union(XRelation(b, 2), XRelation(b, 3)), DimensionMismatch);
  EXPECT_THROW(rel_compose(XRelation(b, 2), XRelation(cost_chain(3), 2)), DimensionMismatch);
  EXPECT_THROW(XRelation(b, 2, {0, 1, 1}), InputError);
  EXPECT_THROW(XRelation(b, 1, {2}), InputError);
}
