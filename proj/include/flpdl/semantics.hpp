#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "flpdl/relation.hpp"
#include "flpdl/syntax.hpp"

namespace flpdl {

/// States plus one relation per atomic action. Atomic actions that are not
/// mapped denote the constant-bottom relation.
class Frame {
 public:
  Frame(AlgebraPtr algebra, std::size_t states, std::map<std::size_t, XRelation> atomic = {});

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return n_; }
  const std::map<std::size_t, XRelation>& atomic_relations() const { return atomic_; }
  bool has_atomic(std::size_t m) const { return atomic_.count(m) != 0; }
  XRelation atomic(std::size_t m) const;

 private:
  AlgebraPtr alg_;
  std::size_t n_;
  std::map<std::size_t, XRelation> atomic_;
};

/// Relation of a composite action by structural recursion, without caching.
XRelation derived_relation(const Frame& frame, const Action& a);

using Valuation = std::map<std::size_t, std::vector<Elem>>;

/// Frame plus valuation. Unmapped (variable, state) pairs take the algebra's
/// zero. Immutable; derived relations are memoized behind a mutex, so one
/// model can be evaluated from several threads.
class Model {
 public:
  Model(Frame frame, Valuation valuation, std::vector<std::string> state_names = {});

  const Frame& frame() const { return frame_; }
  const AlgebraPtr& algebra() const { return frame_.algebra(); }
  std::size_t size() const { return frame_.size(); }
  const Valuation& valuation() const { return valuation_; }
  Elem value_of(std::size_t var, State s) const;
  const std::vector<std::string>& state_names() const { return names_; }
  std::string state_name(State s) const;

  /// Memoized derived_relation. With `strict`, throws UnknownAtom for atomic
  /// actions missing from the frame.
  const XRelation& relation(const Action& a, bool strict = false) const;

 private:
  struct Cache;
  Frame frame_;
  Valuation valuation_;
  std::vector<std::string> names_;
  std::shared_ptr<Cache> cache_;
};

/// Per-query evaluator memoizing the value vector of every subformula.
class Evaluator {
 public:
  explicit Evaluator(const Model& model, bool strict = false) : model_(model), strict_(strict) {}

  /// Values of f at every state.
  const std::vector<Elem>& values(const Formula& f);
  Elem value(const Formula& f, State s) { return values(f)[s]; }

 private:
  const Model& model_;
  bool strict_;
  std::unordered_map<Formula, std::vector<Elem>> memo_;
};

Elem evaluate(const Model& model, const Formula& f, State s, bool strict = false);

/// Direct recursion on (formula, state) with no memo of any kind; the
/// reference the cached path is tested against.
Elem evaluate_uncached(const Model& model, const Formula& f, State s);

struct ValidityResult {
  bool valid = true;
  State witness = 0;  // meaningful when !valid
  Elem value = 0;
};

/// Valid iff 1 <= V(f, s) at every state; otherwise reports the first failing state.
ValidityResult valid_in_model(const Model& model, const Formula& f, bool strict = false);

}  // namespace flpdl
