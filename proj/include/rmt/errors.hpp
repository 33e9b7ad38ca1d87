#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

// Numerical failure (non-convergence, solver breakdown). Domain/precondition
// violations use std::domain_error instead.
class numeric_error : public std::runtime_error {
public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or malformed input data (CSV matrices, cache files).
class io_error : public std::runtime_error {
public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rmt
