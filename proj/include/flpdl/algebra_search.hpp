#pragma once

#include <cstddef>
#include <functional>

#include "flpdl/algebra.hpp"

namespace flpdl {

/// Enumerates finite FL-algebras with carrier size 2..max_size in a fixed
/// canonical order and returns the first one satisfying `accept`.
///
/// Lattices are generated with element 0 as bottom and n-1 as top, with index
/// order a linear extension of the lattice order. Fusion tables range over all
/// tables with `one` as identity and bottom absorbing (both necessary for
/// residuation); every candidate is run through FLAlgebra::build. zero is set
/// to bottom.
AlgebraPtr search_algebra(std::size_t max_size, const std::function<bool(const FLAlgebra&)>& accept);

/// First algebra with some a not below 1.
AlgebraPtr find_non_integral(std::size_t max_size = 4);

/// First algebra whose fusion does not commute.
AlgebraPtr find_non_commutative(std::size_t max_size = 4);

}  // namespace flpdl
