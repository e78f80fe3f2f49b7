#pragma once

#include <stdexcept>
#include <string>

namespace qedsim {

/// Invalid or inconsistent user-supplied input: bad parameter domains,
/// malformed or unknown configuration keys, contradictory mode selections.
/// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// A numerical budget was exceeded: Fock-ladder truncation, momentum-grid
/// coverage, scattered-mass loss, or the perturbative-regime bound. These are
/// refusals to produce numbers that would not meet the declared tolerances.
/// The CLI maps this to exit code 3.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qedsim
