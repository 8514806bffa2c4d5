#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "flpdl/algebra.hpp"

namespace flpdl {

enum class ActionKind : std::uint8_t { Atom, Choice, Seq, Plus };

/// Action expression over atomic actions a0, a1, ...: choice, composition and
/// Kleene plus. Immutable, shares structure, compares structurally.
class Action {
 public:
  static Action atom(std::size_t index);
  static Action choice(Action a, Action b);
  static Action seq(Action a, Action b);
  static Action plus(Action a);

  ActionKind kind() const;
  std::size_t atom_index() const;
  const Action& left() const;   // Choice, Seq, Plus (operand)
  const Action& right() const;  // Choice, Seq
  std::size_t hash() const;
  std::size_t node_count() const;

  friend bool operator==(const Action& a, const Action& b);
  friend bool operator!=(const Action& a, const Action& b) { return !(a == b); }
  friend bool operator<(const Action& a, const Action& b) { return compare(a, b) < 0; }
  friend int compare(const Action& a, const Action& b);

 private:
  friend class Formula;
  struct Node;
  Action() = default;
  explicit Action(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind : std::uint8_t { Var, Const, And, Or, Fuse, LDiv, RDiv, Box };

/// Formula of the many-valued dynamic language. `RDiv(l, r)` is the implication
/// l -> r, whose value is V(l) => V(r), i.e. V(r) / V(l). `LDiv(l, r)` is l \ r.
class Formula {
 public:
  static Formula var(std::size_t index);
  static Formula constant(Elem c);
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula fuse(Formula l, Formula r);
  static Formula ldiv(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula box(Action a, Formula f);

  // Derived connectives, expanded into the primitive ones.
  static Formula iff(const Formula& l, const Formula& r);
  static Formula neg(const Formula& f, const FLAlgebra& alg);
  static Formula diamond(const Action& a, const Formula& f, const FLAlgebra& alg);

  FormulaKind kind() const;
  std::size_t var_index() const;
  Elem const_value() const;
  const Formula& lhs() const;  // binary left operand; Box body
  const Formula& rhs() const;  // binary right operand
  const Action& action() const;
  std::size_t hash() const;
  std::size_t node_count() const;
  bool is_binary() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) { return compare(a, b) < 0; }
  friend int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Canonical text. Constants print as #0, #1, #bot, #top when `alg` identifies
/// them, otherwise as #@k. parse_formula(to_string(f)) == f.
std::string to_string(const Action& a);
std::string to_string(const Formula& f, const FLAlgebra* alg = nullptr);

/// Matches `l <-> r` as produced by Formula::iff.
bool match_iff(const Formula& f, Formula* l = nullptr, Formula* r = nullptr);

std::set<std::size_t> atoms_of(const Action& a);
std::set<std::size_t> atoms_of(const Formula& f);
std::set<std::size_t> variables_of(const Formula& f);
/// Largest constant index used, or -1 if none.
long max_constant(const Formula& f);

/// All syntactic subformulas of f, f first, without duplicates (preorder).
std::vector<Formula> subformulas(const Formula& f);

}  // namespace flpdl

template <>
struct std::hash<flpdl::Action> {
  std::size_t operator()(const flpdl::Action& a) const noexcept { return a.hash(); }
};
template <>
struct std::hash<flpdl::Formula> {
  std::size_t operator()(const flpdl::Formula& f) const noexcept { return f.hash(); }
};

namespace flpdl {

/// Ordered, duplicate-free formula list.
class ClosureSet {
 public:
  ClosureSet() = default;

  /// Appends f unless present; returns true if it was new.
  bool insert(const Formula& f);
  bool contains(const Formula& f) const { return index_.count(f) != 0; }
  std::size_t size() const { return items_.size(); }
  const std::vector<Formula>& items() const { return items_; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Formula> items_;
  std::unordered_set<Formula> index_;
};

/// Least superset of `seed` closed under subformulas and the box-unfolding
/// rules for choice, composition and plus. Always finite.
ClosureSet closure_of(const std::vector<Formula>& seed);

/// Checks the closure conditions directly on `set`, without saturating.
bool is_closed(const ClosureSet& set);

}  // namespace flpdl
