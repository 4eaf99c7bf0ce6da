#pragma once

#include <stdexcept>
#include <string>

namespace hdepth {

/// Invalid construction parameter (family bounds, ranges, flag combinations).
struct ParameterError : std::invalid_argument {
  explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Input exceeds a hard engine limit (e.g. the 2^n subset scan cap).
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

/// The selected engine cannot handle the given module shape.
struct EngineError : std::runtime_error {
  explicit EngineError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input file.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hdepth
