#pragma once

#include <stdexcept>
#include <string>

namespace segqc {

/// Bad or inconsistent data: files, shapes, labels, manifests.
struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad configuration: unknown keys, invalid values, infeasible settings.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numeric failure: non-finite loss or gradients.
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace segqc
