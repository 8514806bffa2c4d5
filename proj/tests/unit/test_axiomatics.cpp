#include <gtest/gtest.h>

#include "flpdl/algebra_search.hpp"
#include "flpdl/axiomatics.hpp"
#include "flpdl/decide.hpp"
#include "flpdl/parser.hpp"
#include "flpdl/random.hpp"

using namespace flpdl;

namespace {

ProofLine line(const std::string& text, const FLAlgebra& alg, RuleKind kind, std::vector<std::size_t> refs = {},
               std::optional<Axiom> ax = std::nullopt) {
  return {parse_formula(text, alg), {kind, std::move(refs), ax}};
}

ProofScript plus_to_step(const FLAlgebra& alg) {
  return {
      line("(p & [a+]p) -> p", alg, RuleKind::Log),
      line("[a+]p <-> [a](p & [a+]p)", alg, RuleKind::Axiom, {}, Axiom::Plus),
      line("[a](p & [a+]p) -> [a]p", alg, RuleKind::Mon, {0}),
      line("[a+]p -> [a]p", alg, RuleKind::Log, {1, 2}),
  };
}

/// One random instance of each scheme.
std::vector<std::pair<Axiom, Formula>> random_instances(Rng& rng, const FLAlgebra& alg) {
  FormulaShape shape;
  shape.depth = 1;
  const Formula f = random_formula(rng, alg, shape);
  const Formula g = random_formula(rng, alg, shape);
  const Action a = random_action(rng, 1, 2);
  const Action b = random_action(rng, 1, 2);
  const Formula c = Formula::constant(static_cast<Elem>(rng() % alg.size()));
  const Action ap = Action::plus(a);
  return {
      {Axiom::One, Formula::box(a, Formula::constant(alg.one()))},
      {Axiom::Regular,
       Formula::implies(Formula::conj(Formula::box(a, f), Formula::box(a, g)), Formula::box(a, Formula::conj(f, g)))},
      {Axiom::Constant, Formula::iff(Formula::box(a, Formula::implies(c, f)), Formula::implies(c, Formula::box(a, f)))},
      {Axiom::Choice, Formula::iff(Formula::box(Action::choice(a, b), f), Formula::conj(Formula::box(a, f), Formula::box(b, f)))},
      {Axiom::Seq, Formula::iff(Formula::box(Action::seq(a, b), f), Formula::box(a, Formula::box(b, f)))},
      {Axiom::Plus, Formula::iff(Formula::box(ap, f), Formula::box(a, Formula::conj(f, Formula::box(ap, f))))},
  };
}

}  // namespace

TEST(Axiomatics, MatchExamples) {
  auto b = bool2();
  EXPECT_EQ(match_axiom(parse_formula("[a]#1", *b), *b), Axiom::One);
  EXPECT_EQ(match_axiom(parse_formula("[a u b]p <-> ([a]p & [b]p)", *b), *b), Axiom::Choice);
  EXPECT_EQ(match_axiom(parse_formula("[a;b]p <-> [a][b]p", *b), *b), Axiom::Seq);
  EXPECT_EQ(match_axiom(parse_formula("[a+]p <-> [a](p & [a+]p)", *b), *b), Axiom::Plus);
  EXPECT_EQ(match_axiom(parse_formula("([a]p & [a]q) -> [a](p & q)", *b), *b), Axiom::Regular);
  EXPECT_EQ(match_axiom(parse_formula("[a](#0 -> p) <-> (#0 -> [a]p)", *b), *b), Axiom::Constant);
  EXPECT_FALSE(match_axiom(parse_formula("[a]p -> [a]p", *b), *b));
  EXPECT_FALSE(match_axiom(parse_formula("([a]p & [b]p) <-> [a u b]p", *b), *b));
  EXPECT_FALSE(match_axiom(parse_formula("[a](p -> q) <-> (p -> [a]q)", *b), *b));
}

TEST(Axiomatics, AxiomNames) {
  for (auto ax : {Axiom::One, Axiom::Regular, Axiom::Constant, Axiom::Choice, Axiom::Seq, Axiom::Plus})
    EXPECT_EQ(parse_axiom_name(to_string(ax)), ax);
  EXPECT_EQ(parse_axiom_name("A-∪"), Axiom::Choice);
  EXPECT_EQ(parse_axiom_name("A-c̄"), Axiom::Constant);
  EXPECT_FALSE(parse_axiom_name("A-9"));
  EXPECT_EQ(parse_rule_kind("RMon"), RuleKind::Mon);
  EXPECT_EQ(parse_rule_kind("rplus"), RuleKind::Plus);
}

TEST(Axiomatics, RandomInstancesMatchTheirScheme) {
  Rng rng(67);
  auto c3 = cost_chain(3);
  for (int i = 0; i < 100; ++i) {
    for (const auto& [ax, f] : random_instances(rng, *c3)) {
      const auto m = match_axiom(f, *c3);
      ASSERT_TRUE(m) << to_string(f, c3.get());
      EXPECT_EQ(*m, ax) << to_string(f, c3.get());
    }
  }
}

TEST(Axiomatics, LogConsequenceExamples) {
  auto b = bool2();
  auto c3 = cost_chain(3);
  EXPECT_TRUE(log_consequence({}, parse_formula("p | !p", *b), *b));
  EXPECT_FALSE(log_consequence({}, parse_formula("p | !p", *c3), *c3));
  const auto cex = log_counterexample({}, parse_formula("p | !p", *c3), *c3);
  ASSERT_TRUE(cex);
  ASSERT_EQ(cex->atoms.size(), 1u);
  EXPECT_EQ(cex->values[0], 1);
  for (const auto& alg : {bool2(), cost_chain(3), cost_chain(5), product(*bool2(), *cost_chain(3))}) {
    EXPECT_TRUE(log_consequence({}, parse_formula("(p & q) -> p", *alg), *alg));
    EXPECT_TRUE(log_consequence({}, parse_formula("[a]p -> [a]p", *alg), *alg));
    // boxes are opaque atoms
    EXPECT_FALSE(log_consequence({}, parse_formula("[a]p -> [b]p", *alg), *alg));
  }
}

TEST(Axiomatics, LogConsequenceIsMonotoneAndReflexive) {
  Rng rng(71);
  for (const auto& alg : {bool2(), cost_chain(3)}) {
    for (int i = 0; i < 60; ++i) {
      FormulaShape shape;
      shape.depth = 2;
      const Formula f = random_formula(rng, *alg, shape);
      const Formula g = random_formula(rng, *alg, shape);
      const Formula h = random_formula(rng, *alg, shape);
      EXPECT_TRUE(log_consequence({f}, f, *alg));
      EXPECT_TRUE(log_consequence({f, Formula::implies(f, g)}, g, *alg));
      if (log_consequence({f}, g, *alg)) {
        EXPECT_TRUE(log_consequence({f, h}, g, *alg));
      }
    }
  }
}

TEST(Axiomatics, AtomBudget) {
  auto c5 = cost_chain(5);
  const auto f = parse_formula("(p0 & p1 & p2 & p3) -> p0", *c5);
  EXPECT_THROW(log_consequence({}, f, *c5, 600), AtomBudgetExceeded);
  EXPECT_TRUE(log_consequence({}, f, *c5, 625));
}

TEST(Axiomatics, ThreeLineProofAccepted) {
  auto b = bool2();
  const auto v = check_proof(plus_to_step(*b), *b);
  EXPECT_TRUE(v.accepted) << v.message;
  ASSERT_TRUE(v.theorem);
  EXPECT_EQ(*v.theorem, parse_formula("[a+]p -> [a]p", *b));
  EXPECT_TRUE(v.warnings.empty());
  // the conclusion is valid on random models too
  Rng rng(73);
  auto c3 = cost_chain(3);
  EXPECT_TRUE(check_proof(plus_to_step(*c3), *c3).accepted);
  for (int i = 0; i < 50; ++i) {
    const auto m = random_model(rng, c3, 1 + i % 4, 1, 1);
    EXPECT_TRUE(valid_in_model(m, parse_formula("[a+]p -> [a]p", *c3)).valid);
  }
}

TEST(Axiomatics, Rejections) {
  auto b = bool2();
  auto script = plus_to_step(*b);
  script[2].by.refs = {3};
  auto v = check_proof(script, *b);
  EXPECT_FALSE(v.accepted);
  EXPECT_EQ(v.reason, Rejection::CircularCitation);
  EXPECT_EQ(v.failing_line, 2u);

  script = plus_to_step(*b);
  script[2].by.refs = {2};
  EXPECT_EQ(check_proof(script, *b).reason, Rejection::CircularCitation);

  script = plus_to_step(*b);
  script[3].by.refs = {1, 9};
  EXPECT_EQ(check_proof(script, *b).reason, Rejection::BadReference);

  script = plus_to_step(*b);
  script[1].by.axiom = Axiom::Seq;
  EXPECT_EQ(check_proof(script, *b).reason, Rejection::NotAnAxiom);

  for (const char* conclusion : {"#1 -> [a+]p", "#1 -> [b+]#1", "#0 -> [a+]#1"}) {
    const ProofScript rplus = {
        line("[a]#1", *b, RuleKind::Axiom),
        line("#1 -> [a]#1", *b, RuleKind::Log, {0}),
        line(conclusion, *b, RuleKind::Plus, {1}),
    };
    v = check_proof(rplus, *b);
    EXPECT_EQ(v.reason, Rejection::RuleShape) << conclusion;
    EXPECT_EQ(v.failing_line, 2u);
  }

  const ProofScript unsupported = {line("p -> [a]p", *b, RuleKind::Log)};
  EXPECT_EQ(check_proof(unsupported, *b).reason, Rejection::NotALogConsequence);

  EXPECT_THROW(check_proof({}, *b), InputError);
}

TEST(Axiomatics, RPlusAccepted) {
  auto b = bool2();
  const ProofScript script = {
      line("#1 -> [a]#1", *b, RuleKind::Log, {1}),
  };
  EXPECT_FALSE(check_proof(script, *b).accepted);
  const ProofScript good = {
      line("[a]#1", *b, RuleKind::Axiom),
      line("#1 -> [a]#1", *b, RuleKind::Log, {0}),
      line("#1 -> [a+]#1", *b, RuleKind::Plus, {1}),
  };
  const auto v = check_proof(good, *b);
  EXPECT_TRUE(v.accepted) << v.message;
}

TEST(Axiomatics, AxiomInstancesAreSoundOverCommutativeIntegralAlgebras) {
  Rng rng(79);
  for (const auto& alg : {bool2(), cost_chain(3), cost_chain(5), product(*bool2(), *cost_chain(3))}) {
    for (int i = 0; i < 25; ++i) {
      const auto m = random_model(rng, alg, 1 + i % 4, 2, 2);
      for (const auto& [ax, f] : random_instances(rng, *alg)) {
        const auto r = valid_in_model(m, f);
        EXPECT_TRUE(r.valid) << to_string(ax) << ": " << to_string(f, alg.get());
      }
    }
  }
}

TEST(Axiomatics, ConstantAxiomNeedsCommutativity) {
  auto nc = find_non_commutative(4);
  ASSERT_TRUE(nc);
  bool failed = false;
  for (Elem c = 0; c < nc->size() && !failed; ++c) {
    const auto f = parse_formula("[a](#@" + std::to_string(c) + " -> p) <-> (#@" + std::to_string(c) + " -> [a]p)", *nc);
    EXPECT_EQ(match_axiom(f, *nc), Axiom::Constant);
    failed = decide_bounded(f, nc, {.max_states = 2}).is_countermodel();
  }
  EXPECT_TRUE(failed);

  const ProofScript script = {line("[a]#1", *nc, RuleKind::Axiom)};
  const auto v = check_proof(script, *nc);
  EXPECT_TRUE(v.accepted);
  EXPECT_FALSE(v.warnings.empty());
}

TEST(Axiomatics, NonIntegralAlgebraWarns) {
  auto ni = find_non_integral(4);
  ASSERT_TRUE(ni);
  const ProofScript script = {line("[a]#1", *ni, RuleKind::Axiom)};
  EXPECT_FALSE(check_proof(script, *ni).warnings.empty());
}
