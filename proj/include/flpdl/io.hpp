#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "flpdl/axiomatics.hpp"
#include "flpdl/decide.hpp"
#include "flpdl/filtration.hpp"

namespace flpdl {

using json = nlohmann::json;

/// builtin:bool2, builtin:cost:N, builtin:product(<a>,<b>); operands of
/// product may omit the builtin: prefix and nest.
AlgebraPtr parse_builtin(std::string_view uri);

/// A builtin URI, a path to an algebra file, or inline JSON text.
AlgebraPtr resolve_algebra(const std::string& ref);

/// {size, names?, meet, join, fusion, one, zero}; tables nested n*n or flat.
/// A string is resolved with resolve_algebra relative to `base`.
AlgebraPtr algebra_from_json(const json& j, const std::filesystem::path& base = {});
json algebra_to_json(const FLAlgebra& alg);

json read_json_file(const std::filesystem::path& path);

/// Element given as an index or as a name of `alg`.
Elem element_from_json(const json& j, const FLAlgebra& alg);

/// {algebra?, states, relations?, valuation?}. `fallback` is used when the
/// file names no algebra; a file algebra that differs from a given fallback
/// is an InputError.
Model model_from_json(const json& j, const AlgebraPtr& fallback = nullptr, const std::filesystem::path& base = {});
Model load_model(const std::filesystem::path& path, const AlgebraPtr& fallback = nullptr);
json model_to_json(const Model& model);

/// Either an array of lines or {algebra?, lines}. Each line is
/// {formula, by: {kind, refs?, axiom?}}.
ProofScript proof_from_json(const json& j, const FLAlgebra& alg);
json proof_to_json(const ProofScript& script, const FLAlgebra& alg);

json verdict_to_json(const ProofVerdict& v, const FLAlgebra& alg);
json outcome_to_json(const DecisionOutcome& outcome, const Formula& phi);
json frontier_to_json(const SearchFrontier& frontier);
json partition_to_json(const Partition& p);
json property_report_to_json(const PropertyReport& report);

}  // namespace flpdl
