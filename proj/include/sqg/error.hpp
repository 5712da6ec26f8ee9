#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sqg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid grid, solver or scenario configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different grids, time grids or have the wrong size.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where the operator is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Non-finite input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed SQGF file. Carries the byte offset where decoding failed.
class FormatError : public Error {
 public:
  FormatError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqg
