#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "flpdl/error.hpp"

namespace flpdl {

/// Index of an algebra element. Carriers are small, so every operation is a
/// table lookup.
using Elem = std::uint16_t;

/// User-facing description of a finite FL-algebra. Tables are row-major n*n.
struct AlgebraSpec {
  std::size_t size = 0;
  std::vector<std::string> names;  // empty, or exactly `size` entries
  std::vector<Elem> meet;
  std::vector<Elem> join;
  std::vector<Elem> fusion;
  Elem one = 0;
  Elem zero = 0;
};

class AlgebraError : public Error {
 public:
  enum class Kind { InvalidSpec, NotALattice, NotAMonoid, NotResiduated };
  AlgebraError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(AlgebraError::Kind kind);

/// A validated finite FL-algebra: lattice, monoid, residuals, and an arbitrary
/// distinguished element zero. Immutable once built.
///
/// Notation used throughout: `ldiv(a, c)` is a\c, `rdiv(c, a)` is c/a, and
/// `implies(a, c)` is a => c, defined as c/a.
class FLAlgebra {
 public:
  /// Validates `spec` and derives residuals, extrema and the order.
  /// Throws AlgebraError naming the first failing tuple.
  static std::shared_ptr<const FLAlgebra> build(AlgebraSpec spec);

  std::size_t size() const { return n_; }
  const AlgebraSpec& spec() const { return spec_; }

  Elem meet(Elem a, Elem b) const { return spec_.meet[idx(a, b)]; }
  Elem join(Elem a, Elem b) const { return spec_.join[idx(a, b)]; }
  Elem fuse(Elem a, Elem b) const { return spec_.fusion[idx(a, b)]; }
  Elem ldiv(Elem a, Elem c) const { return left_residual_[idx(a, c)]; }
  Elem rdiv(Elem c, Elem a) const { return right_residual_[idx(c, a)]; }
  Elem implies(Elem a, Elem c) const { return rdiv(c, a); }
  bool leq(Elem a, Elem b) const { return join(a, b) == b; }

  Elem one() const { return spec_.one; }
  Elem zero() const { return spec_.zero; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  std::string name(Elem e) const;
  std::optional<Elem> find_name(const std::string& name) const;

  bool operator==(const FLAlgebra& other) const;

  const std::vector<Elem>& left_residual_table() const { return left_residual_; }
  const std::vector<Elem>& right_residual_table() const { return right_residual_; }

 private:
  FLAlgebra() = default;
  std::size_t idx(Elem a, Elem b) const { return static_cast<std::size_t>(a) * n_ + b; }

  AlgebraSpec spec_;
  std::size_t n_ = 0;
  std::vector<Elem> left_residual_;   // a\c at [a][c]
  std::vector<Elem> right_residual_;  // c/a at [c][a]
  Elem bottom_ = 0;
  Elem top_ = 0;
};

using AlgebraPtr = std::shared_ptr<const FLAlgebra>;

bool is_commutative(const FLAlgebra& alg);
bool is_integral(const FLAlgebra& alg);

/// Outcome of one of the eight standard FL-algebra properties.
struct PropertyCheck {
  int number = 0;  // 1..8
  std::string statement;
  bool passed = true;
  std::vector<Elem> counterexample;  // first failing tuple, if any
};

struct PropertyReport {
  std::vector<PropertyCheck> checks;
  bool all_passed() const;
};

/// Exhaustively checks the eight basic properties every FL-algebra satisfies
/// (order via =>, monotonicity, distribution, =>-meet/join laws, currying,
/// =>-composition, and 1 => a = a).
PropertyReport check_algebra_properties(const FLAlgebra& alg);

/// Componentwise product; element (a, b) has index a * |B| + b.
AlgebraPtr product(const FLAlgebra& a, const FLAlgebra& b);

/// Two-element Boolean algebra: fusion is meet, zero = bottom, one = top.
AlgebraPtr bool2();

/// Cost chain {0..N-1}: meet = max, join = min, fusion = min(a+b, N-1),
/// one = zero = 0. Requires N >= 1.
AlgebraPtr cost_chain(std::size_t n);

}  // namespace flpdl
