#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hga {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A sample or parameter violates its construction invariants.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// An argument lies outside the domain of a function.
class DomainError : public Error {
public:
  using Error::Error;
};

/// The given means cannot belong to any sample (ordering h <= g <= a violated).
class InfeasibleError : public Error {
public:
  using Error::Error;
};

/// The input sits exactly on the equality case where a strict bound is undefined.
class DegenerateInputError : public Error {
public:
  using Error::Error;
};

/// A matrix failed its Cholesky factorization.
class DefinitenessError : public Error {
public:
  using Error::Error;
};

/// A problem is too large (or too small) for the requested operation.
class SizeError : public Error {
public:
  using Error::Error;
};

/// Random feasible generation could not produce enough points.
class GenerationError : public Error {
public:
  using Error::Error;
};

/// Malformed input file; carries the offending line (1-based, 0 if unknown) and field.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : Error(format(what, line, field)), line_(line), field_(std::move(field)) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

private:
  static std::string format(const std::string& what, std::size_t line, const std::string& field) {
    std::string msg = what;
    if (line > 0) msg += " (line " + std::to_string(line) + ")";
    if (!field.empty()) msg += " [field: " + field + "]";
    return msg;
  }

  std::size_t line_;
  std::string field_;
};

}  // namespace hga
