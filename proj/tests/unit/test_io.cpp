#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "flpdl/io.hpp"
#include "flpdl/parser.hpp"
#include "flpdl/random.hpp"

using namespace flpdl;
namespace fs = std::filesystem;

TEST(Io, Builtins) {
  EXPECT_TRUE(*parse_builtin("builtin:bool2") == *bool2());
  EXPECT_TRUE(*parse_builtin("builtin:cost:4") == *cost_chain(4));
  const auto p = parse_builtin("builtin:product(bool2,builtin:product(cost:3,bool2))");
  EXPECT_EQ(p->size(), 12u);
  EXPECT_TRUE(*p == *product(*bool2(), *product(*cost_chain(3), *bool2())));
  EXPECT_THROW(parse_builtin("builtin:cost:"), InputError);
  EXPECT_THROW(parse_builtin("builtin:cost:0"), InputError);
  EXPECT_THROW(parse_builtin("builtin:product(bool2)"), InputError);
  EXPECT_THROW(parse_builtin("builtin:lukasiewicz"), InputError);
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& alg : {bool2(), cost_chain(5), product(*bool2(), *cost_chain(3))}) {
    const auto j = algebra_to_json(*alg);
    const auto back = algebra_from_json(j);
    EXPECT_TRUE(*back == *alg);
    EXPECT_EQ(back->name(back->top()), alg->name(alg->top()));
    EXPECT_TRUE(*resolve_algebra(j.dump()) == *alg);
  }
}

TEST(Io, AlgebraFlatTablesAndFiles) {
  json j = {{"size", 2},     {"meet", {0, 0, 0, 1}}, {"join", {0, 1, 1, 1}},
            {"fusion", {0, 0, 0, 1}}, {"one", 1},  {"zero", 0}};
  EXPECT_TRUE(*algebra_from_json(j) == *bool2());
  const auto dir = fs::temp_directory_path() / "flpdl_test_io";
  fs::create_directories(dir);
  std::ofstream(dir / "b.json") << j.dump();
  EXPECT_TRUE(*resolve_algebra((dir / "b.json").string()) == *bool2());
  EXPECT_TRUE(*algebra_from_json(json("b.json"), dir) == *bool2());
  EXPECT_THROW(resolve_algebra((dir / "missing.json").string()), InputError);
  j["fusion"] = {0, 0, 0, 0};
  EXPECT_THROW(algebra_from_json(j), AlgebraError);
  EXPECT_THROW(algebra_from_json(json{{"size", 2}}), InputError);
  fs::remove_all(dir);
}

TEST(Io, ModelRoundTrip) {
  Rng rng(83);
  for (const auto& alg : {bool2(), cost_chain(3), product(*bool2(), *cost_chain(3))}) {
    const auto m = random_model(rng, alg, 3, 2, 2);
    const auto back = model_from_json(model_to_json(m));
    ASSERT_EQ(back.size(), 3u);
    EXPECT_TRUE(*back.algebra() == *alg);
    EXPECT_EQ(back.frame().atomic(0), m.frame().atomic(0));
    EXPECT_EQ(back.frame().atomic(1), m.frame().atomic(1));
    for (State s = 0; s < 3; ++s) {
      EXPECT_EQ(back.value_of(0, s), m.value_of(0, s));
      EXPECT_EQ(back.value_of(1, s), m.value_of(1, s));
    }
  }
}

TEST(Io, ModelFormsAndErrors) {
  auto c3 = cost_chain(3);
  const json named = {{"states", {"x", "y"}},
                      {"relations", {{"a", {{"2", "1"}, {2, 2}}}}},
                      {"valuation", {{"p", {0, "2"}}}}};
  const auto m = model_from_json(named, c3);
  EXPECT_EQ(m.state_name(1), "y");
  EXPECT_EQ(m.frame().atomic(0)(0, 1), 1);
  EXPECT_EQ(m.value_of(0, 1), 2);
  EXPECT_EQ(evaluate(m, parse_formula("<a> #0", *c3), 0), 1);

  const json flat = {{"states", 2}, {"relations", {{"a0", {2, 1, 2, 2}}}}};
  EXPECT_EQ(model_from_json(flat, c3).frame().atomic(0), m.frame().atomic(0));

  EXPECT_THROW(model_from_json(flat), InputError);  // no algebra at all
  json other = flat;
  other["algebra"] = "builtin:bool2";
  EXPECT_THROW(model_from_json(other, c3), InputError);
  json bad = flat;
  bad["relations"]["a0"] = {0, 1, 2};
  EXPECT_THROW(model_from_json(bad, c3), InputError);
  bad = flat;
  bad["relations"] = {{"zz", {0, 0, 0, 0}}};
  EXPECT_THROW(model_from_json(bad, c3), InputError);
  EXPECT_THROW(element_from_json(json("nope"), *c3), InputError);
  EXPECT_THROW(element_from_json(json(7), *c3), InputError);
}

TEST(Io, ProofRoundTrip) {
  auto b = bool2();
  const json j = json::parse(R"([
    {"formula": "[a]#1", "by": {"kind": "axiom", "axiom": "A-1"}},
    {"formula": "#1 -> [a]#1", "by": {"kind": "LogConsequence", "refs": [0]}},
    {"formula": "#1 -> [a+]#1", "by": {"kind": "R-+", "refs": [1]}}
  ])");
  const auto script = proof_from_json(j, *b);
  ASSERT_EQ(script.size(), 3u);
  EXPECT_EQ(script[1].by.kind, RuleKind::Log);
  EXPECT_EQ(script[2].by.kind, RuleKind::Plus);
  EXPECT_EQ(script[0].by.axiom, Axiom::One);
  const auto again = proof_from_json(proof_to_json(script, *b), *b);
  ASSERT_EQ(again.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(again[i].formula, script[i].formula);
    EXPECT_EQ(again[i].by.refs, script[i].by.refs);
  }
  EXPECT_EQ(proof_from_json(json{{"lines", j}}, *b).size(), 3u);

  const auto v = verdict_to_json(check_proof(script, *b), *b);
  EXPECT_EQ(v["accepted"], true);

  json broken = j;
  broken[1]["formula"] = "#1 -> [a";
  EXPECT_THROW(proof_from_json(broken, *b), InputError);
  broken = j;
  broken[1]["by"]["kind"] = "magic";
  EXPECT_THROW(proof_from_json(broken, *b), InputError);
}

TEST(Io, OutcomeJson) {
  auto b = bool2();
  const auto f = parse_formula("p -> [a]p", *b);
  const auto out = decide_bounded(f, b, {.max_states = 2});
  const auto j = outcome_to_json(out, f);
  EXPECT_EQ(j["result"], "countermodel");
  const auto m = model_from_json(j["model"]);
  EXPECT_FALSE(valid_in_model(m, f).valid);
  const auto valid = decide_bounded(Formula::constant(1), b, {.max_states = 2});
  EXPECT_EQ(outcome_to_json(valid, Formula::constant(1))["result"], "valid_by_exhaustion");
}
