#pragma once

#include <stdexcept>
#include <string>

namespace sdc {

// Base for all library errors. CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (edge lists, query files). Carries a line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Header/content contradiction or impossible dimensions.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Out-of-domain parameter (k < 1, epsilon outside [0, 1/2], ...).
class ParamError : public Error {
 public:
  using Error::Error;
};

// Id outside the valid range of its structure.
class BoundsError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exact/enumeration path.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Unrecognized magic, version or kind tag in a serialized stream.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Stream decodes but violates structural invariants, or ends early.
class CorruptError : public Error {
 public:
  using Error::Error;
};

// Underlying stream/file failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace sdc
