#ifndef DELVER_ERRORS_HPP
#define DELVER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace delver {

// Invalid configuration: bad scenario files, missing table cells, unknown keys.
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Inputs outside an operation's domain: off-simplex vectors, bad node ids,
// non-positive temperatures, dimension mismatches.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// A computation that needs more data than the caller supplied, e.g. a
// trajectory shorter than the requested analysis window.
struct InsufficientDataError : std::runtime_error {
  explicit InsufficientDataError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace delver

#endif
