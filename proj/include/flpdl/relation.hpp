#pragma once

#include <cstddef>
#include <vector>

#include "flpdl/algebra.hpp"

namespace flpdl {

using State = std::size_t;

/// An algebra-valued binary relation on the states 0..size-1, stored densely.
/// Values are immutable; every operation returns a fresh relation.
class XRelation {
 public:
  /// The constant-bottom relation.
  XRelation(AlgebraPtr algebra, std::size_t size);
  /// Throws InputError if `values` has the wrong shape or holds invalid elements.
  XRelation(AlgebraPtr algebra, std::size_t size, std::vector<Elem> values);

  static XRelation identity(AlgebraPtr algebra, std::size_t size);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t size() const { return n_; }
  Elem operator()(State s, State t) const { return values_[s * n_ + t]; }
  const std::vector<Elem>& values() const { return values_; }

  /// Pointwise order: every entry of *this is below the matching entry of `other`.
  bool leq(const XRelation& other) const;
  bool is_transitive() const;
  bool is_reflexive() const;

  bool operator==(const XRelation& other) const { return n_ == other.n_ && values_ == other.values_; }

 private:
  AlgebraPtr alg_;
  std::size_t n_;
  std::vector<Elem> values_;
};

/// Pointwise join. Throws DimensionMismatch.
XRelation rel_union(const XRelation& r, const XRelation& q);

/// (R o Q)(s,t) = join over x of R(s,x) . Q(x,t). Throws DimensionMismatch.
XRelation rel_compose(const XRelation& r, const XRelation& q);

/// Least transitive relation extending R, by iterating T -> R u (T o R) from R
/// until a full round changes nothing.
XRelation transitive_closure(const XRelation& r);

/// R+ with the diagonal forced to one.
XRelation refl_trans_closure(const XRelation& r);

}  // namespace flpdl
