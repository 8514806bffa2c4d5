// fl-pdl: command-line front end.
//
// Exit codes: 0 success / valid / accepted, 1 countermodel / invalid /
// rejected, 2 input error, 3 budget exhausted.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "acceptance.hpp"
#include "flpdl/algebra_search.hpp"
#include "flpdl/axiomatics.hpp"
#include "flpdl/decide.hpp"
#include "flpdl/filtration.hpp"
#include "flpdl/io.hpp"
#include "flpdl/parser.hpp"

namespace {

using namespace flpdl;

enum Exit { kOk = 0, kNegative = 1, kInput = 2, kBudget = 3 };

struct Common {
  std::string format = "json";
  bool text() const { return format == "text"; }
};

/// Prints the JSON report (json mode) or the summary (text mode) on stdout;
/// in json mode the summary goes to stderr.
void report(const Common& c, const json& j, const std::string& summary) {
  if (c.text()) {
    std::cout << summary << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
  }
}

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("FLPDL_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  std::uint64_t out = 0;
  std::istringstream in(v);
  if (!(in >> out) || !in.eof()) throw InputError("FLPDL_BUDGET must be a non-negative integer");
  return out;
}

std::uint64_t pick_budget(const std::optional<std::uint64_t>& flag, std::uint64_t fallback) {
  if (flag) return *flag;
  if (auto e = env_budget()) return *e;
  return fallback;
}

Formula parse_with_warning(const std::string& text, const FLAlgebra& alg) {
  ParseInfo info;
  Formula f = parse_formula(text, alg, &info);
  if (info.used_star && !is_integral(alg)) {
    std::cerr << "warning: [a*] is read as [a+]f & f, which matches the reflexive-transitive reading only over "
                 "integral algebras\n";
  }
  return f;
}

Model load_model_arg(const std::string& path, const std::string& algebra_ref) {
  AlgebraPtr fallback = algebra_ref.empty() ? nullptr : resolve_algebra(algebra_ref);
  return load_model(path, fallback);
}

std::string values_text(const Model& m, const std::vector<Elem>& values) {
  std::string out;
  for (State s = 0; s < values.size(); ++s) {
    out += "  " + m.state_name(s) + ": " + m.algebra()->name(values[s]) + "\n";
  }
  return out;
}

// Subcommands -------------------------------------------------------------

struct AlgebraCheckArgs {
  std::string algebra;
  std::string search;
  std::size_t max_size = 4;
};

int algebra_check(const Common& c, const AlgebraCheckArgs& a) {
  AlgebraPtr alg;
  if (!a.search.empty()) {
    if (a.search == "non-integral") alg = find_non_integral(a.max_size);
    else if (a.search == "non-commutative") alg = find_non_commutative(a.max_size);
    else throw InputError("--search takes non-integral or non-commutative");
    if (!alg) {
      report(c, json{{"found", false}}, "no such algebra with at most " + std::to_string(a.max_size) + " elements");
      return kNegative;
    }
  } else {
    if (a.algebra.empty()) throw InputError("algebra-check needs --algebra or --search");
    try {
      alg = resolve_algebra(a.algebra);
    } catch (const AlgebraError& e) {
      report(c, json{{"valid", false}, {"error", to_string(e.kind())}, {"message", e.what()}},
             std::string("invalid algebra: ") + e.what());
      return kNegative;
    }
  }
  const auto props = check_algebra_properties(*alg);
  json j{{"valid", true},
         {"algebra", algebra_to_json(*alg)},
         {"commutative", is_commutative(*alg)},
         {"integral", is_integral(*alg)},
         {"bottom", alg->bottom()},
         {"top", alg->top()},
         {"properties", property_report_to_json(props)}};
  std::ostringstream s;
  s << "valid FL-algebra with " << alg->size() << " elements; " << (is_commutative(*alg) ? "" : "not ")
    << "commutative, " << (is_integral(*alg) ? "" : "not ") << "integral\n";
  for (const auto& p : props.checks) s << "  property " << p.number << (p.passed ? " holds: " : " FAILS: ") << p.statement << "\n";
  report(c, j, s.str());
  return props.all_passed() ? kOk : kNegative;
}

struct ModelArgs {
  std::string model;
  std::string algebra;
  std::string formula;
  std::optional<std::size_t> state;
  bool strict = false;
};

int eval_cmd(const Common& c, const ModelArgs& a) {
  const Model m = load_model_arg(a.model, a.algebra);
  const Formula f = parse_with_warning(a.formula, *m.algebra());
  Evaluator ev(m, a.strict);
  const auto& values = ev.values(f);
  if (a.state && *a.state >= m.size()) throw InputError("--state is out of range");
  json j{{"formula", to_string(f, m.algebra().get())}};
  if (a.state) {
    j["state"] = *a.state;
    j["value"] = values[*a.state];
    j["value_name"] = m.algebra()->name(values[*a.state]);
    report(c, j, m.state_name(*a.state) + ": " + m.algebra()->name(values[*a.state]));
  } else {
    j["values"] = values;
    report(c, j, values_text(m, values));
  }
  return kOk;
}

int valid_cmd(const Common& c, const ModelArgs& a) {
  const Model m = load_model_arg(a.model, a.algebra);
  const Formula f = parse_with_warning(a.formula, *m.algebra());
  const auto r = valid_in_model(m, f, a.strict);
  json j{{"formula", to_string(f, m.algebra().get())}, {"valid", r.valid}};
  if (r.valid) {
    report(c, j, "valid in the model");
    return kOk;
  }
  j["witness"] = r.witness;
  j["witness_name"] = m.state_name(r.witness);
  j["value"] = r.value;
  j["value_name"] = m.algebra()->name(r.value);
  report(c, j, "not valid: value " + m.algebra()->name(r.value) + " at " + m.state_name(r.witness));
  return kNegative;
}

struct FilterArgs {
  std::string model;
  std::string algebra;
  std::vector<std::string> seeds;
  bool check = false;
};

int filter_cmd(const Common& c, const FilterArgs& a) {
  const Model m = load_model_arg(a.model, a.algebra);
  std::vector<Formula> seeds;
  for (const auto& s : a.seeds) seeds.push_back(parse_with_warning(s, *m.algebra()));
  const auto phi = closure_of(seeds);
  const auto filt = filtrate(m, phi);
  BigInt bound = 1;
  for (std::size_t i = 0; i < phi.size(); ++i) bound *= m.algebra()->size();
  json closure = json::array();
  for (const auto& f : phi) closure.push_back(to_string(f, m.algebra().get()));
  json j{{"closure", closure},
         {"class_count", filt.partition.class_count()},
         {"bound", bound.str()},
         {"partition", partition_to_json(filt.partition)},
         {"model", model_to_json(filt.model)}};
  std::ostringstream s;
  s << filt.partition.class_count() << " classes (bound " << bound.str() << ") from " << m.size() << " states; |closure| = "
    << phi.size();
  int code = kOk;
  if (a.check) {
    Evaluator src(m), dst(filt.model);
    std::size_t mismatches = 0;
    for (const auto& f : phi) {
      for (State st = 0; st < m.size(); ++st) {
        if (src.value(f, st) != dst.value(f, filt.partition.class_of[st])) ++mismatches;
      }
    }
    const bool ok = mismatches == 0 && BigInt(filt.partition.class_count()) <= bound;
    j["check"] = {{"passed", ok}, {"mismatches", mismatches}};
    s << "; check " << (ok ? "passed" : "FAILED");
    if (!ok) code = kNegative;
  }
  report(c, j, s.str());
  return code;
}

struct DecideArgs {
  std::string algebra;
  std::string formula;
  std::size_t max_states = 2;
  std::optional<std::uint64_t> budget;
  std::string mode = "exhaustive";
  std::uint64_t seed = 0;
};

int decide_cmd(const Common& c, const DecideArgs& a) {
  const auto alg = resolve_algebra(a.algebra);
  const Formula f = parse_with_warning(a.formula, *alg);
  DecideOptions opts;
  opts.max_states = a.max_states;
  opts.budget = pick_budget(a.budget, opts.budget);
  opts.seed = a.seed;
  if (a.mode == "exhaustive") opts.mode = SearchMode::Exhaustive;
  else if (a.mode == "sample") opts.mode = SearchMode::Sample;
  else throw InputError("--mode takes exhaustive or sample");
  try {
    const auto outcome = decide_bounded(f, alg, opts);
    json j = outcome_to_json(outcome, f);
    j["bound"] = theoretical_bound(f, *alg).str();
    if (const auto* cm = std::get_if<Countermodel>(&outcome.result)) {
      report(c, j, "countermodel with " + std::to_string(cm->model.size()) + " states: value " + alg->name(cm->value) +
                       " at " + cm->model.state_name(cm->witness));
      return kNegative;
    }
    if (outcome.is_valid_by_exhaustion()) {
      report(c, j, "valid: no countermodel up to the filtration bound " + theoretical_bound(f, *alg).str());
    } else {
      report(c, j, "no countermodel with at most " + std::to_string(a.max_states) + " states (" +
                       std::to_string(outcome.models_checked) + " models checked); bound is " +
                       theoretical_bound(f, *alg).str());
    }
    return kOk;
  } catch (const BudgetExceeded& e) {
    json j{{"result", "budget_exceeded"}, {"frontier", frontier_to_json(e.frontier())}};
    report(c, j, e.what());
    return kBudget;
  }
}

struct ProveArgs {
  std::string algebra;
  std::string proof;
  std::optional<std::uint64_t> budget;
};

int prove_cmd(const Common& c, const ProveArgs& a) {
  const json pj = read_json_file(a.proof);
  AlgebraPtr alg;
  if (!a.algebra.empty()) alg = resolve_algebra(a.algebra);
  else if (pj.is_object() && pj.contains("algebra")) alg = algebra_from_json(pj.at("algebra"), std::filesystem::path(a.proof).parent_path());
  else throw InputError("prove-check needs --algebra (or an algebra field in the proof file)");
  const auto script = proof_from_json(pj, *alg);
  try {
    const auto v = check_proof(script, *alg, pick_budget(a.budget, kDefaultAtomBudget));
    for (const auto& w : v.warnings) std::cerr << "warning: " << w << "\n";
    if (v.accepted) {
      report(c, verdict_to_json(v, *alg), "accepted: " + to_string(*v.theorem, alg.get()));
      return kOk;
    }
    report(c, verdict_to_json(v, *alg), "rejected (" + std::string(to_string(*v.reason)) + ") " + v.message);
    return kNegative;
  } catch (const AtomBudgetExceeded& e) {
    report(c, json{{"result", "budget_exceeded"}, {"message", e.what()}}, e.what());
    return kBudget;
  }
}

struct SelftestArgs {
  std::string corpus = FLPDL_CORPUS_DIR;
  std::string fixtures = FLPDL_FIXTURE_DIR;
  std::uint64_t seed = acceptance::Config{}.seed;
};

int selftest_cmd(const Common& c, const SelftestArgs& a) {
  acceptance::Config cfg{a.corpus, a.fixtures, a.seed};
  json results = json::array();
  bool all = true;
  acceptance::run_all(cfg, [&](const acceptance::CriterionResult& r) {
    all = all && r.passed;
    if (c.text()) std::cout << acceptance::format(r) << std::endl;
    else std::cerr << acceptance::format(r) << std::endl;
    results.push_back({{"criterion", r.number},
                       {"title", r.title},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"limit_seconds", r.limit_seconds},
                       {"detail", r.detail}});
  });
  if (!c.text()) std::cout << json{{"passed", all}, {"criteria", results}}.dump(2) << "\n";
  return all ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Many-valued propositional dynamic logic over finite FL-algebras"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "text"}));

  AlgebraCheckArgs ac;
  auto* cmd_ac = app.add_subcommand("algebra-check", "Validate an algebra and check the lemma properties");
  cmd_ac->add_option("--algebra", ac.algebra, "builtin:... URI, file, or inline JSON");
  cmd_ac->add_option("--search", ac.search, "Search for a non-integral or non-commutative algebra");
  cmd_ac->add_option("--max-size", ac.max_size, "Largest carrier for --search");

  ModelArgs ev;
  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a formula in a model");
  ModelArgs va;
  auto* cmd_valid = app.add_subcommand("valid", "Check validity of a formula in a model");
  for (auto [cmd, args] : {std::pair{cmd_eval, &ev}, std::pair{cmd_valid, &va}}) {
    cmd->add_option("--model", args->model, "Model file")->required();
    cmd->add_option("--algebra", args->algebra, "Algebra, when the model file names none");
    cmd->add_option("--formula", args->formula, "Formula text")->required();
    cmd->add_flag("--strict", args->strict, "Reject atomic actions missing from the model");
  }
  cmd_eval->add_option("--state", ev.state, "Only this state");

  FilterArgs fi;
  auto* cmd_filter = app.add_subcommand("filter", "Filtrate a model through the closure of seed formulas");
  cmd_filter->add_option("--model", fi.model, "Model file")->required();
  cmd_filter->add_option("--algebra", fi.algebra, "Algebra, when the model file names none");
  cmd_filter->add_option("--seed-formula", fi.seeds, "Seed formula (repeatable)")->required();
  cmd_filter->add_flag("--check", fi.check, "Verify that closure values survive the filtration");

  DecideArgs de;
  auto* cmd_decide = app.add_subcommand("decide", "Bounded countermodel search");
  cmd_decide->add_option("--algebra", de.algebra, "Algebra")->required();
  cmd_decide->add_option("--formula", de.formula, "Formula text")->required();
  cmd_decide->add_option("--max-states", de.max_states, "Largest frame size")->check(CLI::PositiveNumber);
  cmd_decide->add_option("--budget", de.budget, "Frames (exhaustive) or models (sample) to visit");
  cmd_decide->add_option("--mode", de.mode, "exhaustive or sample")->check(CLI::IsMember({"exhaustive", "sample"}));
  cmd_decide->add_option("--seed", de.seed, "Seed for sample mode");

  ProveArgs pr;
  auto* cmd_prove = app.add_subcommand("prove-check", "Check a proof script");
  cmd_prove->add_option("--algebra", pr.algebra, "Algebra");
  cmd_prove->add_option("--proof", pr.proof, "Proof file")->required();
  cmd_prove->add_option("--atom-budget", pr.budget, "Assignments allowed per propositional step");

  SelftestArgs st;
  auto* cmd_self = app.add_subcommand("selftest", "Run the acceptance suite");
  cmd_self->add_option("--corpus", st.corpus, "Corpus directory");
  cmd_self->add_option("--fixtures", st.fixtures, "Fixture directory");
  cmd_self->add_option("--seed", st.seed, "Seed for the randomized criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*cmd_ac) return algebra_check(common, ac);
    if (*cmd_eval) return eval_cmd(common, ev);
    if (*cmd_valid) return valid_cmd(common, va);
    if (*cmd_filter) return filter_cmd(common, fi);
    if (*cmd_decide) return decide_cmd(common, de);
    if (*cmd_prove) return prove_cmd(common, pr);
    if (*cmd_self) return selftest_cmd(common, st);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
