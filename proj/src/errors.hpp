#pragma once

#include <stdexcept>
#include <string>

namespace ckforms {

// Raised on malformed user input: bad group parameters, ragged or
// non-injective torus maps, schema violations in pair files.
struct InvalidInput : std::runtime_error {
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an internal consistency check fails (a bug, not user error).
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ckforms
