#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slipekf {

/// Base class for all library errors. `kind()` is a stable machine-readable
/// tag; `what()` carries the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

struct AngleNearPi : Error {
  explicit AngleNearPi(const std::string& w) : Error("AngleNearPi", w) {}
};

struct NonMonotonicTime : Error {
  explicit NonMonotonicTime(const std::string& w) : Error("NonMonotonicTime", w) {}
};

struct SingularInnovation : Error {
  explicit SingularInnovation(const std::string& w) : Error("SingularInnovation", w) {}
};

struct SingularSteadyCovariance : Error {
  explicit SingularSteadyCovariance(const std::string& w)
      : Error("SingularSteadyCovariance", w) {}
};

struct LengthMismatch : Error {
  explicit LengthMismatch(const std::string& w) : Error("LengthMismatch", w) {}
};

struct InvalidProfile : Error {
  explicit InvalidProfile(const std::string& w) : Error("InvalidProfile", w) {}
};

struct EmptyWindow : Error {
  explicit EmptyWindow(const std::string& w) : Error("EmptyWindow", w) {}
};

struct NonMonotonicTimestamps : Error {
  explicit NonMonotonicTimestamps(const std::string& w)
      : Error("NonMonotonicTimestamps", w) {}
};

struct ConfigError : Error {
  explicit ConfigError(const std::string& w) : Error("ConfigError", w) {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& w)
      : Error("ParseError",
              "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": " + w),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace slipekf
