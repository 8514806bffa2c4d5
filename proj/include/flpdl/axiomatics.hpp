#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flpdl/syntax.hpp"

namespace flpdl {

enum class Axiom { One, Regular, Constant, Choice, Seq, Plus };

/// Canonical ASCII names: A-1, A-reg, A-c, A-u, A-;, A-+.
const char* to_string(Axiom ax);
/// Also accepts the typographic forms (A-c̄, A-∪) and A-const, A-union, A-seq, A-plus.
std::optional<Axiom> parse_axiom_name(std::string_view name);

/// The scheme f instantiates, if any. Checked in declaration order.
///
///   A-1    [a]#1
///   A-reg  ([a]f & [a]g) -> [a](f & g)
///   A-c    [a](c -> f) <-> (c -> [a]f)   c any constant
///   A-u    [a u b]f <-> ([a]f & [b]f)
///   A-;    [a;b]f <-> [a][b]f
///   A-+    [a+]f <-> [a](f & [a+]f)
std::optional<Axiom> match_axiom(const Formula& f, const FLAlgebra& alg);

constexpr std::uint64_t kDefaultAtomBudget = 10'000'000;

/// Gamma |- phi in the propositional base logic of `alg`, decided by brute
/// force: variables and outermost box subformulas are atoms, every assignment
/// of elements to them is tried, and phi must be above one wherever every
/// member of Gamma is. Throws AtomBudgetExceeded if |X|^atoms > budget.
bool log_consequence(const std::vector<Formula>& gamma, const Formula& phi, const FLAlgebra& alg,
                     std::uint64_t atom_budget = kDefaultAtomBudget);

/// Failing assignment from the same search, if any: atom formulas and their values.
struct Assignment {
  std::vector<Formula> atoms;
  std::vector<Elem> values;
};
std::optional<Assignment> log_counterexample(const std::vector<Formula>& gamma, const Formula& phi,
                                             const FLAlgebra& alg, std::uint64_t atom_budget = kDefaultAtomBudget);

enum class RuleKind { Axiom, Log, Mon, Plus };

const char* to_string(RuleKind k);
std::optional<RuleKind> parse_rule_kind(std::string_view name);

struct Justification {
  RuleKind kind = RuleKind::Log;
  std::vector<std::size_t> refs;  // 0-based line indices
  std::optional<Axiom> axiom;     // optional label for Axiom lines
};

struct ProofLine {
  Formula formula;
  Justification by;
};

using ProofScript = std::vector<ProofLine>;

enum class Rejection {
  CircularCitation,    // cites itself or a later line
  BadReference,        // index beyond the script, or wrong arity
  NotAnAxiom,
  NotALogConsequence,
  RuleShape,
};

const char* to_string(Rejection r);

struct ProofVerdict {
  bool accepted = false;
  std::optional<std::size_t> failing_line;
  std::optional<Rejection> reason;
  std::string message;
  /// Soundness hypotheses the algebra misses (commutativity, integrality).
  std::vector<std::string> warnings;
  std::optional<Formula> theorem;  // last line when accepted
};

/// Checks every line in order and stops at the first failure. Throws
/// InputError on an empty script; AtomBudgetExceeded propagates.
ProofVerdict check_proof(const ProofScript& script, const FLAlgebra& alg,
                         std::uint64_t atom_budget = kDefaultAtomBudget);

}  // namespace flpdl
