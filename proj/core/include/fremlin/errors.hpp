#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fremlin {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// A documented precondition does not hold. `coordinate()` names the offending
/// index when the violation is coordinatewise.
class PreconditionViolation : public Error {
 public:
  explicit PreconditionViolation(const std::string& what, std::size_t coordinate = npos)
      : Error(what), coordinate_(coordinate) {}

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t coordinate() const noexcept { return coordinate_; }

 private:
  std::size_t coordinate_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input. `path()` is a JSON-pointer-like location.
class ParseError : public Error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace fremlin
