#pragma once

#include <stdexcept>
#include <string>

namespace cal {

// Violation of an internal contract (mismatched labels, broken oracle
// guarantees, impossible states). Distinct from bad user input, which is
// reported via std::invalid_argument / std::domain_error.
class ContractViolation : public std::logic_error {
public:
  explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace cal
