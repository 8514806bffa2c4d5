#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace flpdl::acceptance {

struct Config {
  std::filesystem::path corpus_dir;
  std::filesystem::path fixture_dir;
  std::uint64_t seed = 20261015;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: none
  std::string detail;
};

std::string format(const CriterionResult& r);

CriterionResult algebra_validation(const Config& cfg);
CriterionResult closure_minimality(const Config& cfg);
CriterionResult classical_reduction(const Config& cfg);
CriterionResult lemma_of_validities(const Config& cfg);
CriterionResult filtration_theorem(const Config& cfg);
CriterionResult decision_procedure(const Config& cfg);
CriterionResult proof_checker_soundness(const Config& cfg);
CriterionResult integrality_boundary(const Config& cfg);

/// All eight in order; `on_result` sees each as soon as it finishes.
std::vector<CriterionResult> run_all(const Config& cfg,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

/// Re-derives the boundary witnesses and writes them to `dir`.
void write_fixtures(const std::filesystem::path& dir);

}  // namespace flpdl::acceptance
