#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace ringlab {

/// Verdict of a (ring, property) query together with its evidence.
struct PropertyReport {
  std::string ring;
  std::string property;
  bool verdict = false;
  /// Witness data for a true verdict (shifts, generators, decompositions).
  nlohmann::json witness;
  /// Smallest failing instance for a false verdict.
  nlohmann::json counterexample;
  /// Description of the search space that was covered.
  nlohmann::json bounds;

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["ring"] = ring;
    j["property"] = property;
    j["verdict"] = verdict;
    j["witness"] = witness;
    j["counterexample"] = counterexample;
    j["bounds"] = bounds;
    return j;
  }
};

}  // namespace ringlab
