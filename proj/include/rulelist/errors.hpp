#pragma once

#include <stdexcept>
#include <string>

namespace rulelist {

/// Bad command line usage or a malformed/incomplete config file.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unreadable, malformed or inconsistent input data.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace rulelist
