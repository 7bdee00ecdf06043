#pragma once

#include <stdexcept>
#include <string>

namespace hypzeta {

enum class ErrorKind { domain, range, pole, conditioning, degenerate_data };

/// Base for every error raised by the library. `kind()` lets the CLI map
/// failures onto exit statuses without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorKind::range, what) {}
};

/// Raised when a value is requested exactly at the simple pole s = 1.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what) : Error(ErrorKind::pole, what) {}
};

class ConditioningError : public Error {
 public:
  explicit ConditioningError(const std::string& what) : Error(ErrorKind::conditioning, what) {}
};

class DegenerateDataError : public Error {
 public:
  explicit DegenerateDataError(const std::string& what)
      : Error(ErrorKind::degenerate_data, what) {}
};

}  // namespace hypzeta
