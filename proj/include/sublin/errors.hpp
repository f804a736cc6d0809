#pragma once

#include <stdexcept>
#include <string>

namespace sublin {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A query kind was issued against a model that does not grant it.
struct CapabilityError : std::runtime_error {
  CapabilityError(const std::string& model, const std::string& kind)
      : std::runtime_error("model " + model + " does not permit " + kind + " queries") {}
};

struct RangeError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

struct ParameterError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

struct EmptyGraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsatisfiableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace sublin
