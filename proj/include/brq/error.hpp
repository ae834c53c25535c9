#pragma once

#include <stdexcept>
#include <string>

namespace brq {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Mathematically invalid input: non-associative table, non-projective
/// matrices, a cochain that is not a cocycle, and so on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain", what) {}
  DomainError(std::string kind, const std::string& what)
      : Error(std::move(kind), what) {}
};

class ValidationError : public DomainError {
 public:
  explicit ValidationError(const std::string& what)
      : DomainError("validation", what) {}
};

/// A computation would exceed a configured size limit.
class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& what) : Error("size_limit", what) {}
};

}  // namespace brq
