#pragma once

#include <stdexcept>
#include <string>

namespace entmat {

/// Invalid user input: bad graph JSON, bad bipartition, out-of-range
/// parameters. Maps to CLI exit code 2.
struct input_error : std::invalid_argument {
  explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Request exceeds a supported problem size (dense simulation, canonical
/// forms, enumeration). Maps to CLI exit code 3.
struct size_limit_error : std::runtime_error {
  explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

/// Midpoint coincidence detection became tolerance-unstable: two clusters
/// sit between tol and 10*tol apart. Maps to CLI exit code 4.
struct ambiguity_error : std::runtime_error {
  explicit ambiguity_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace entmat
