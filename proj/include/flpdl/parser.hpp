#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "flpdl/syntax.hpp"

namespace flpdl {

struct ParseInfo {
  /// Set when the text used the Kleene-star sugar [alpha*]phi.
  bool used_star = false;
};

/// Parses formula text against `alg` (constants must name its elements).
///
/// Grammar, loosest to tightest binding:
///   phi <-> psi      (right-assoc; sugar for (phi -> psi) & (psi -> phi))
///   phi | psi
///   phi & psi
///   phi -> psi, phi \ psi   (right-assoc)
///   phi * psi        (fusion)
///   !phi, [alpha]phi, <alpha>phi
/// Atoms: p0, p1, ... (also p, q, r for p0..p2), constants #0 (zero), #1 (one),
/// #bot, #top, #k (element k, k >= 2), #@k (element k), #name (element name).
/// Actions: a0, a1, ... (also a, b, c for a0..a2), `;`, `u`, postfix `+`, and
/// postfix `*`, which is expanded as [alpha*]phi := [alpha+]phi & phi.
///
/// Throws SyntaxError or UnknownConstant.
Formula parse_formula(std::string_view text, const FLAlgebra& alg, ParseInfo* info = nullptr);

/// Parses a star-free action expression.
Action parse_action(std::string_view text);

/// "a7" -> 7, "b" -> 1; nullopt for anything else.
std::optional<std::size_t> action_atom_index(std::string_view name);
/// "p3" -> 3, "q" -> 1; nullopt for anything else.
std::optional<std::size_t> variable_index(std::string_view name);

}  // namespace flpdl
