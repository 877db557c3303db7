#pragma once

#include <stdexcept>
#include <string>

namespace adaptball {

// Raised for malformed configuration files or invalid CLI arguments.
// The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a precondition gate fails (e.g. the truth is not self-similar
// and --allow-nonselfsim was not passed). CLI exit code 3.
class gate_error : public std::runtime_error {
public:
  explicit gate_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace adaptball
