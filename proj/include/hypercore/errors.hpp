#pragma once

#include <stdexcept>
#include <string>

namespace hypercore {

// Raised when a construction would exceed a configured size cap.
// The CLI maps this to its own exit code, distinct from other failures.
class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hypercore
