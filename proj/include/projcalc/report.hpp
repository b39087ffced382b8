#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace projcalc {

/// Outcome of an identity check: what was checked, with which parameters, and where it failed.
struct Report {
  Report(std::string id, nlohmann::json params = nlohmann::json::object())
      : identity(std::move(id)), parameters(std::move(params)) {}

  std::string identity;
  nlohmann::json parameters;
  bool passed = true;
  std::optional<std::string> witness;

  void fail(std::string where) {
    if (passed) witness = std::move(where);
    passed = false;
  }

  nlohmann::json to_json() const {
    nlohmann::json j{{"identity", identity}, {"parameters", parameters}, {"status", passed ? "pass" : "fail"}};
    if (witness) j["witness"] = *witness;
    return j;
  }
};

}  // namespace projcalc
