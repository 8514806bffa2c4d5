#include <gtest/gtest.h>

#include "flpdl/decide.hpp"
#include "flpdl/parser.hpp"

using namespace flpdl;

TEST(Decide, PersistenceHasSmallCountermodel) {
  auto b = bool2();
  const auto f = parse_formula("p -> [a]p", *b);
  const auto out = decide_bounded(f, b, {.max_states = 2});
  ASSERT_TRUE(out.is_countermodel());
  const auto& cm = std::get<Countermodel>(out.result);
  ASSERT_EQ(cm.model.size(), 2u);
  EXPECT_EQ(cm.value, 0);
  // up to renaming: p true exactly at the witness, which has an edge to the other state
  const State w = cm.witness, o = 1 - w;
  EXPECT_EQ(cm.model.value_of(0, w), 1);
  EXPECT_EQ(cm.model.value_of(0, o), 0);
  EXPECT_EQ(cm.model.frame().atomic(0)(w, o), 1);
  EXPECT_FALSE(valid_in_model(cm.model, f).valid);
  EXPECT_EQ(evaluate_uncached(cm.model, f, w), 0);
}

TEST(Decide, ValidFormulasHaveNoCountermodel) {
  for (const auto& alg : {bool2(), cost_chain(3)}) {
    const auto f = parse_formula("[a u b]p <-> ([a]p & [b]p)", *alg);
    const auto out = decide_bounded(f, alg, {.max_states = 2});
    ASSERT_TRUE(std::holds_alternative<NoCountermodelUpTo>(out.result));
    EXPECT_EQ(std::get<NoCountermodelUpTo>(out.result).states, 2u);
    EXPECT_GT(out.frames_checked, 0u);
  }
}

TEST(Decide, ConstantOneIsValidByExhaustion) {
  for (const auto& alg : {bool2(), cost_chain(3)}) {
    const auto f = Formula::constant(alg->one());
    const auto out = decide_bounded(f, alg, {.max_states = alg->size()});
    ASSERT_TRUE(out.is_valid_by_exhaustion());
    EXPECT_EQ(std::get<ValidByExhaustion>(out.result).bound, alg->size());
  }
  // short of the bound there is no such claim
  auto c3 = cost_chain(3);
  const auto out = decide_bounded(Formula::constant(0), c3, {.max_states = 2});
  EXPECT_FALSE(out.is_valid_by_exhaustion());
}

TEST(Decide, InvalidConstantCaughtAtOneState) {
  auto c3 = cost_chain(3);
  const auto out = decide_bounded(Formula::constant(1), c3, {.max_states = 3});
  ASSERT_TRUE(out.is_countermodel());
  EXPECT_EQ(std::get<Countermodel>(out.result).model.size(), 1u);
  EXPECT_EQ(out.frames_checked, 1u);
}

TEST(Decide, BudgetExceededReportsFrontier) {
  auto c3 = cost_chain(3);
  const auto f = parse_formula("[a u b]p <-> ([a]p & [b]p)", *c3);
  try {
    decide_bounded(f, c3, {.max_states = 3, .budget = 100});
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.frontier().frames_total, 100u);
    EXPECT_GE(e.frontier().states, 1u);
    EXPECT_LE(e.frontier().frames_at_size, e.frontier().frames_total);
    EXPECT_GT(e.frontier().models_total, 0u);
  }
}

TEST(Decide, SampleModeIsSeeded) {
  auto c3 = cost_chain(3);
  const auto f = parse_formula("[a+]p -> [a]p & p", *c3);
  DecideOptions opt{.max_states = 3, .budget = 500, .mode = SearchMode::Sample, .seed = 99};
  const auto x = decide_bounded(f, c3, opt);
  const auto y = decide_bounded(f, c3, opt);
  ASSERT_EQ(x.is_countermodel(), y.is_countermodel());
  ASSERT_TRUE(x.is_countermodel());
  const auto& cx = std::get<Countermodel>(x.result);
  const auto& cy = std::get<Countermodel>(y.result);
  EXPECT_EQ(cx.witness, cy.witness);
  EXPECT_EQ(cx.model.frame().atomic(0), cy.model.frame().atomic(0));
  EXPECT_EQ(x.models_checked, y.models_checked);

  const auto valid = decide_bounded(parse_formula("[a ; b]p <-> [a][b]p", *c3), c3, opt);
  EXPECT_TRUE(std::holds_alternative<NoCountermodelUpTo>(valid.result));
  EXPECT_EQ(valid.models_checked, 500u);
}

TEST(Decide, RejectsZeroStates) {
  auto b = bool2();
  EXPECT_THROW(decide_bounded(Formula::var(0), b, {.max_states = 0}), InputError);
}
