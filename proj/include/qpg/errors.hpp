#pragma once

#include <stdexcept>
#include <string>

namespace qpg {

// State failed a runtime validity check (e.g. lost normalization).
struct invalid_state_error : std::runtime_error {
  explicit invalid_state_error(const std::string& what) : std::runtime_error(what) {}
};

// Requested computation exceeds the configured resource caps.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// No feasible heterogeneous contribution plan exists for the given inputs.
struct infeasible_plan_error : std::runtime_error {
  explicit infeasible_plan_error(const std::string& what) : std::runtime_error(what) {}
};

// The (scheme, interpretation) combination has no known closed-form payoff.
struct no_closed_form_error : std::runtime_error {
  explicit no_closed_form_error(const std::string& what) : std::runtime_error(what) {}
};

// A structurally valid but unsupported configuration (e.g. a 2-player ring).
struct unsupported_configuration_error : std::runtime_error {
  explicit unsupported_configuration_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpg
