#pragma once

#include <stdexcept>
#include <string>

namespace groupopt {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Unknown family name, missing parameter, or parameter outside its declared range.
class family_error : public error {
 public:
  explicit family_error(const std::string& msg) : error(msg) {}
};

/// Evaluation outside the admissible domain, inadmissible group size,
/// missing bracket, solver disagreement, and similar run-time conditions.
class domain_error : public error {
 public:
  explicit domain_error(const std::string& msg) : error(msg) {}
};

}  // namespace groupopt
