#pragma once

#include <stdexcept>
#include <string>

namespace pnc {

// Invalid or resource-exceeding run configuration, detected before any work.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// An internal invariant failed; results must not be trusted or clamped.
class ConsistencyError : public std::logic_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pnc
