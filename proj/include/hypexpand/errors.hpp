#pragma once

#include <stdexcept>
#include <string>

namespace hypexpand {

/// Input outside the domain of an operation (point outside the disk, bad factor, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation hit a chart singularity or a degenerate configuration.
class DegenerateError : public std::runtime_error {
 public:
  explicit DegenerateError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hypexpand
