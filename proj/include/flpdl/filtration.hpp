#pragma once

#include <cstddef>
#include <vector>

#include "flpdl/semantics.hpp"

namespace flpdl {

/// States grouped by their vector of values on a formula set.
struct Partition {
  std::vector<std::size_t> class_of;   // state -> class id
  std::vector<State> representative;   // class id -> first member
  std::size_t class_count() const { return representative.size(); }
};

/// s and t share a class iff every formula of `phi` has the same value at both.
/// Class ids follow the order of first occurrence.
Partition phi_partition(const Model& model, const ClosureSet& phi);

struct Filtration {
  Model model;
  Partition partition;
};

/// Smallest filtration through a closed set: classes become states, atomic
/// relations are joined over class members, variables in `phi` keep their
/// value and all other variables of the source model become zero.
/// Throws NotClosed if `phi` is not closed.
Filtration filtrate(const Model& model, const ClosureSet& phi);

}  // namespace flpdl
