#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

/// Catalogue of worked exercises. Each entry recomputes a number through the
/// library and compares it with a reference value produced by the independent
/// oracle script tests/oracles/derive_values.py.
namespace qmkit::exercises {

struct Exercise {
  std::string id;
  int chapter;
  std::string description;
  /// Relative tolerance; absolute when the reference is zero.
  double tolerance;
  std::function<double()> compute;
};

struct ExerciseResult {
  std::string id;
  int chapter;
  std::string description;
  double value;
  double reference;
  double deviation;
  double tolerance;
  bool passed;
  std::string error;  // set when compute threw
};

struct ExerciseReport {
  std::vector<ExerciseResult> results;
  double seconds = 0.0;

  bool all_passed() const;
  std::size_t failures() const;
};

const std::vector<Exercise>& catalogue();

/// Reference value for an id. Throws DomainError for an unknown id.
double reference_value(const std::string& id);

/// Runs every entry, or only those of one chapter.
ExerciseReport run(std::optional<int> chapter = std::nullopt);

}  // namespace qmkit::exercises
