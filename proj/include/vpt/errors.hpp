#pragma once

#include <stdexcept>
#include <string>

namespace vpt {

/// Violated precondition or invariant of a numerical operation.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Filesystem failure (missing file, unwritable path).
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vpt
