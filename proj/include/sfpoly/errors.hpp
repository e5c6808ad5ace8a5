#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sfpoly {

/// Base class for every error raised by the library.
///
/// Errors fall into two families that the command line front end maps to
/// distinct exit codes: domain errors (degenerate or inconsistent input) and
/// parse errors (malformed text).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept = 0;
};

class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

class ParseError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "parse"; }
};

class DimensionMismatch : public DomainError {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : DomainError("dimension mismatch: expected " + std::to_string(expected) +
                    ", got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}
  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class EmptyInput : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Raised by operations that need a full-dimensional polytope.
class NotFullDimensional : public DomainError {
 public:
  NotFullDimensional(std::size_t affine_dim, std::size_t ambient_dim)
      : DomainError("polytope is not full-dimensional: affine_dim " +
                    std::to_string(affine_dim) + " < ambient_dim " +
                    std::to_string(ambient_dim)),
        affine_dim_(affine_dim),
        ambient_dim_(ambient_dim) {}
  std::size_t affine_dim() const noexcept { return affine_dim_; }
  std::size_t ambient_dim() const noexcept { return ambient_dim_; }

 private:
  std::size_t affine_dim_;
  std::size_t ambient_dim_;
};

}  // namespace sfpoly
