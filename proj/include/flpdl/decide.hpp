#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "flpdl/semantics.hpp"

namespace flpdl {

using BigInt = boost::multiprecision::cpp_int;

/// |X|^|closure({phi})|: every countermodel of phi has a filtration with at
/// most this many states.
BigInt theoretical_bound(const Formula& phi, const FLAlgebra& alg);

enum class SearchMode { Exhaustive, Sample };

struct DecideOptions {
  std::size_t max_states = 2;
  /// Exhaustive mode: frames to visit. Sample mode: models to draw.
  std::uint64_t budget = 1'000'000;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
};

struct Countermodel {
  Model model;
  State witness;
  Elem value;  // V(phi, witness), not above one
};

struct NoCountermodelUpTo {
  std::size_t states;
};

struct ValidByExhaustion {
  BigInt bound;
};

struct DecisionOutcome {
  std::variant<Countermodel, NoCountermodelUpTo, ValidByExhaustion> result;
  std::uint64_t frames_checked = 0;
  std::uint64_t models_checked = 0;

  bool is_countermodel() const { return std::holds_alternative<Countermodel>(result); }
  bool is_valid_by_exhaustion() const { return std::holds_alternative<ValidByExhaustion>(result); }
};

/// Where an exhaustive search stopped.
struct SearchFrontier {
  std::size_t states = 0;             // frame size being enumerated
  std::uint64_t frames_at_size = 0;   // frames of that size already checked
  std::uint64_t frames_total = 0;
  std::uint64_t models_total = 0;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, SearchFrontier frontier) : Error(what), frontier_(frontier) {}
  const SearchFrontier& frontier() const { return frontier_; }

 private:
  SearchFrontier frontier_;
};

/// Bounded countermodel search for phi over `alg`.
///
/// Exhaustive mode visits state counts 1..max_states in ascending order, then
/// the relations of the atomic actions occurring in phi in lexicographic
/// element order, then valuations of phi's variables; the first model where
/// some state s has 1 not below V(phi, s) is re-verified with valid_in_model
/// and returned. If max_states reaches theoretical_bound the search stops at
/// the bound and a clean run yields ValidByExhaustion; otherwise it yields
/// NoCountermodelUpTo. Throws BudgetExceeded once `budget` frames are used.
///
/// Sample mode draws `budget` uniform random models (seeded) and never claims
/// more than NoCountermodelUpTo.
DecisionOutcome decide_bounded(const Formula& phi, const AlgebraPtr& alg, const DecideOptions& options);

}  // namespace flpdl
