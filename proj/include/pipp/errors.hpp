#pragma once

#include <stdexcept>
#include <string>

namespace pipp {

/// Invalid model, window or experiment configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical routine failed to reach its tolerance.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public SolverError {
 public:
  using SolverError::SolverError;
};

/// Some point of a pattern has zero conditional intensity given the others.
class ZeroConditionalIntensity : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV input does not follow the sweep table schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pipp
