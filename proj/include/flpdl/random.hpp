#pragma once

#include <cstddef>
#include <random>

#include "flpdl/semantics.hpp"

namespace flpdl {

using Rng = std::mt19937_64;

/// Random action over atoms a0..a{atoms-1}; depth 0 gives an atom.
Action random_action(Rng& rng, std::size_t depth, std::size_t atoms);

struct FormulaShape {
  std::size_t depth = 3;
  std::size_t vars = 2;
  std::size_t atoms = 2;
  std::size_t action_depth = 1;
  bool constants = true;
};

/// Random formula using every connective; depth 0 gives a variable or constant.
Formula random_formula(Rng& rng, const FLAlgebra& alg, const FormulaShape& shape);

/// Uniformly random model: every relation entry and valuation entry drawn
/// independently from the carrier.
Model random_model(Rng& rng, const AlgebraPtr& alg, std::size_t states, std::size_t atoms, std::size_t vars);

}  // namespace flpdl
