#include "flpdl/axiomatics.hpp"

#include <unordered_map>

namespace flpdl {

const char* to_string(Axiom ax) {
  switch (ax) {
    case Axiom::One: return "A-1";
    case Axiom::Regular: return "A-reg";
    case Axiom::Constant: return "A-c";
    case Axiom::Choice: return "A-u";
    case Axiom::Seq: return "A-;";
    case Axiom::Plus: return "A-+";
  }
  return "?";
}

std::optional<Axiom> parse_axiom_name(std::string_view name) {
  if (name == "A-1") return Axiom::One;
  if (name == "A-reg") return Axiom::Regular;
  if (name == "A-c" || name == "A-c̄" || name == "A-const") return Axiom::Constant;
  if (name == "A-u" || name == "A-∪" || name == "A-union") return Axiom::Choice;
  if (name == "A-;" || name == "A-seq") return Axiom::Seq;
  if (name == "A-+" || name == "A-plus") return Axiom::Plus;
  return std::nullopt;
}

std::optional<Axiom> match_axiom(const Formula& f, const FLAlgebra& alg) {
  if (f.kind() == FormulaKind::Box && f.lhs().kind() == FormulaKind::Const && f.lhs().const_value() == alg.one()) {
    return Axiom::One;
  }
  if (f.kind() == FormulaKind::RDiv && f.lhs().kind() == FormulaKind::And &&
      f.lhs().lhs().kind() == FormulaKind::Box && f.lhs().rhs().kind() == FormulaKind::Box) {
    const Action& a = f.lhs().lhs().action();
    const Formula& p = f.lhs().lhs().lhs();
    const Formula& q = f.lhs().rhs().lhs();
    const auto expected =
        Formula::implies(Formula::conj(Formula::box(a, p), Formula::box(a, q)), Formula::box(a, Formula::conj(p, q)));
    if (f == expected) return Axiom::Regular;
  }
  if (!match_iff(f)) return std::nullopt;
  const Formula& l = f.lhs().lhs();
  if (l.kind() != FormulaKind::Box) return std::nullopt;
  const Action& a = l.action();
  const Formula& body = l.lhs();

  if (body.kind() == FormulaKind::RDiv && body.lhs().kind() == FormulaKind::Const) {
    const auto expected = Formula::iff(l, Formula::implies(body.lhs(), Formula::box(a, body.rhs())));
    if (f == expected) return Axiom::Constant;
  }
  switch (a.kind()) {
    case ActionKind::Choice:
      if (f == Formula::iff(l, Formula::conj(Formula::box(a.left(), body), Formula::box(a.right(), body)))) {
        return Axiom::Choice;
      }
      break;
    case ActionKind::Seq:
      if (f == Formula::iff(l, Formula::box(a.left(), Formula::box(a.right(), body)))) return Axiom::Seq;
      break;
    case ActionKind::Plus:
      if (f == Formula::iff(l, Formula::box(a.left(), Formula::conj(body, l)))) return Axiom::Plus;
      break;
    case ActionKind::Atom:
      break;
  }
  return std::nullopt;
}

namespace {

/// Non-modal evaluation program shared by every formula of one query.
class PropProgram {
 public:
  explicit PropProgram(const FLAlgebra& alg) : alg_(alg) {}

  std::size_t add(const Formula& f) {
    if (auto it = ids_.find(f); it != ids_.end()) return it->second;
    Node node{f.kind()};
    switch (f.kind()) {
      case FormulaKind::Var:
      case FormulaKind::Box:
        node.slot = atoms_.size();
        atoms_.push_back(f);
        break;
      case FormulaKind::Const:
        if (f.const_value() >= alg_.size()) throw InputError("constant is not an element of the algebra");
        node.c = f.const_value();
        break;
      default:
        node.l = add(f.lhs());
        node.r = add(f.rhs());
    }
    nodes_.push_back(node);
    return ids_[f] = nodes_.size() - 1;
  }

  const std::vector<Formula>& atoms() const { return atoms_; }

  void run(const std::vector<Elem>& assignment, std::vector<Elem>& out) const {
    out.resize(nodes_.size());
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      const auto& n = nodes_[k];
      switch (n.kind) {
        case FormulaKind::Var:
        case FormulaKind::Box: out[k] = assignment[n.slot]; break;
        case FormulaKind::Const: out[k] = n.c; break;
        case FormulaKind::And: out[k] = alg_.meet(out[n.l], out[n.r]); break;
        case FormulaKind::Or: out[k] = alg_.join(out[n.l], out[n.r]); break;
        case FormulaKind::Fuse: out[k] = alg_.fuse(out[n.l], out[n.r]); break;
        case FormulaKind::LDiv: out[k] = alg_.ldiv(out[n.l], out[n.r]); break;
        case FormulaKind::RDiv: out[k] = alg_.implies(out[n.l], out[n.r]); break;
      }
    }
  }

 private:
  struct Node {
    FormulaKind kind;
    std::size_t slot = 0;
    Elem c = 0;
    std::size_t l = 0, r = 0;
  };
  const FLAlgebra& alg_;
  std::vector<Node> nodes_;
  std::vector<Formula> atoms_;
  std::unordered_map<Formula, std::size_t> ids_;
};

}  // namespace

std::optional<Assignment> log_counterexample(const std::vector<Formula>& gamma, const Formula& phi,
                                             const FLAlgebra& alg, std::uint64_t atom_budget) {
  PropProgram prog(alg);
  std::vector<std::size_t> premises;
  for (const auto& g : gamma) premises.push_back(prog.add(g));
  const std::size_t goal = prog.add(phi);
  const std::size_t k = prog.atoms().size();

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > atom_budget / alg.size()) {
      throw AtomBudgetExceeded(std::to_string(alg.size()) + "^" + std::to_string(k) +
                               " assignments exceed the budget of " + std::to_string(atom_budget));
    }
    total *= alg.size();
  }

  const auto m = static_cast<Elem>(alg.size());
  std::vector<Elem> assignment(k, 0), values;
  while (true) {
    prog.run(assignment, values);
    bool premises_hold = true;
    for (auto p : premises) {
      if (!alg.leq(alg.one(), values[p])) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold && !alg.leq(alg.one(), values[goal])) return Assignment{prog.atoms(), assignment};
    std::size_t i = k;
    while (i > 0 && ++assignment[i - 1] == m) assignment[--i] = 0;
    if (i == 0) break;
  }
  return std::nullopt;
}

bool log_consequence(const std::vector<Formula>& gamma, const Formula& phi, const FLAlgebra& alg,
                     std::uint64_t atom_budget) {
  return !log_counterexample(gamma, phi, alg, atom_budget).has_value();
}

const char* to_string(RuleKind k) {
  switch (k) {
    case RuleKind::Axiom: return "axiom";
    case RuleKind::Log: return "log";
    case RuleKind::Mon: return "rmon";
    case RuleKind::Plus: return "rplus";
  }
  return "?";
}

std::optional<RuleKind> parse_rule_kind(std::string_view name) {
  if (name == "axiom" || name == "PdlAxiom") return RuleKind::Axiom;
  if (name == "log" || name == "LogConsequence") return RuleKind::Log;
  if (name == "rmon" || name == "RMon" || name == "R-mon") return RuleKind::Mon;
  if (name == "rplus" || name == "RPlus" || name == "R-+") return RuleKind::Plus;
  return std::nullopt;
}

const char* to_string(Rejection r) {
  switch (r) {
    case Rejection::CircularCitation: return "CircularCitation";
    case Rejection::BadReference: return "BadReference";
    case Rejection::NotAnAxiom: return "NotAnAxiom";
    case Rejection::NotALogConsequence: return "NotALogConsequence";
    case Rejection::RuleShape: return "RuleShape";
  }
  return "?";
}

namespace {

struct LineFailure {
  Rejection reason;
  std::string message;
};

std::optional<LineFailure> check_line(const ProofScript& script, std::size_t i, const FLAlgebra& alg,
                                      std::uint64_t atom_budget) {
  const ProofLine& line = script[i];
  for (auto r : line.by.refs) {
    if (r >= script.size()) {
      return LineFailure{Rejection::BadReference, "cites line " + std::to_string(r) + " which does not exist"};
    }
    if (r >= i) return LineFailure{Rejection::CircularCitation, "cites line " + std::to_string(r)};
  }
  const Formula& f = line.formula;
  switch (line.by.kind) {
    case RuleKind::Axiom: {
      if (!line.by.refs.empty()) return LineFailure{Rejection::BadReference, "axiom lines cite nothing"};
      auto ax = match_axiom(f, alg);
      if (!ax) return LineFailure{Rejection::NotAnAxiom, "not an instance of any axiom scheme"};
      if (line.by.axiom && *line.by.axiom != *ax) {
        return LineFailure{Rejection::NotAnAxiom, std::string("not an instance of ") + to_string(*line.by.axiom) +
                                                      " (it is " + to_string(*ax) + ")"};
      }
      return std::nullopt;
    }
    case RuleKind::Log: {
      std::vector<Formula> gamma;
      for (auto r : line.by.refs) gamma.push_back(script[r].formula);
      if (auto cex = log_counterexample(gamma, f, alg, atom_budget)) {
        std::string msg = "does not follow from the cited lines; assignment";
        for (std::size_t k = 0; k < cex->atoms.size(); ++k) {
          msg += (k ? ", " : " ") + to_string(cex->atoms[k], &alg) + " = " + alg.name(cex->values[k]);
        }
        return LineFailure{Rejection::NotALogConsequence, msg};
      }
      return std::nullopt;
    }
    case RuleKind::Mon: {
      if (line.by.refs.size() != 1) return LineFailure{Rejection::BadReference, "R-mon cites exactly one line"};
      const Formula& premise = script[line.by.refs[0]].formula;
      if (premise.kind() != FormulaKind::RDiv) {
        return LineFailure{Rejection::RuleShape, "R-mon premise is not an implication"};
      }
      if (f.kind() != FormulaKind::RDiv || f.lhs().kind() != FormulaKind::Box) {
        return LineFailure{Rejection::RuleShape, "R-mon conclusion is not of the form [a]f -> [a]g"};
      }
      const Action& a = f.lhs().action();
      if (f != Formula::implies(Formula::box(a, premise.lhs()), Formula::box(a, premise.rhs()))) {
        return LineFailure{Rejection::RuleShape, "R-mon conclusion does not match the premise"};
      }
      return std::nullopt;
    }
    case RuleKind::Plus: {
      if (line.by.refs.size() != 1) return LineFailure{Rejection::BadReference, "R-+ cites exactly one line"};
      const Formula& premise = script[line.by.refs[0]].formula;
      if (premise.kind() != FormulaKind::RDiv || premise.rhs().kind() != FormulaKind::Box ||
          premise.rhs().lhs() != premise.lhs()) {
        return LineFailure{Rejection::RuleShape, "R-+ premise is not of the form f -> [a]f"};
      }
      const Formula expected =
          Formula::implies(premise.lhs(), Formula::box(Action::plus(premise.rhs().action()), premise.lhs()));
      if (f != expected) return LineFailure{Rejection::RuleShape, "R-+ conclusion is not f -> [a+]f for the premise"};
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

ProofVerdict check_proof(const ProofScript& script, const FLAlgebra& alg, std::uint64_t atom_budget) {
  if (script.empty()) throw InputError("proof script has no lines");
  ProofVerdict verdict;
  if (!is_commutative(alg)) verdict.warnings.push_back("algebra is not commutative; soundness is not guaranteed");
  if (!is_integral(alg)) verdict.warnings.push_back("algebra is not integral; soundness is not guaranteed");
  for (std::size_t i = 0; i < script.size(); ++i) {
    if (auto failure = check_line(script, i, alg, atom_budget)) {
      verdict.failing_line = i;
      verdict.reason = failure->reason;
      verdict.message = "line " + std::to_string(i) + ": " + failure->message;
      return verdict;
    }
  }
  verdict.accepted = true;
  verdict.theorem = script.back().formula;
  return verdict;
}

}  // namespace flpdl
