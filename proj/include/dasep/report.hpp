#pragma once

#include <string>
#include <utility>
#include <vector>

namespace dasep {

/// Outcome of one verification: {theorem, params, pass, witnesses}.
struct Report {
  std::string theorem;
  std::vector<std::pair<std::string, long>> params;
  bool pass = true;
  std::size_t failure_count = 0;
  /// Human-readable evidence; failures first reach the list, capped at kMaxWitnesses.
  std::vector<std::string> witnesses;

  static constexpr std::size_t kMaxWitnesses = 20;

  Report() = default;
  Report(std::string theorem_name, std::vector<std::pair<std::string, long>> parameters)
      : theorem(std::move(theorem_name)), params(std::move(parameters)) {}

  /// Records a failed check with its witness.
  void fail(std::string witness);
  /// Records evidence without affecting pass/fail.
  void note(std::string witness);
  /// Folds another report's outcome into this one.
  void absorb(const Report& other);

  std::string to_json() const;
};

}  // namespace dasep
