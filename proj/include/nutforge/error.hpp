#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nutforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds a configured size bound.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Parameters outside the domain of a constructor (families, builders).
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on input that violates its precondition.
class PreconditionError : public Error {
 public:
  enum class Reason {
    kGeneric,
    kOddModulus,
    kNotAnEdgeDart,
    kEqualMagnitudes,
    kNotNut,
    kNoEligibleDart,
    kOrbitInconsistency,
  };

  PreconditionError(Reason reason, const std::string& what)
      : Error(what), reason_(reason) {}
  explicit PreconditionError(const std::string& what)
      : PreconditionError(Reason::kGeneric, what) {}

  [[nodiscard]] Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// The derived graph of a voltage pregraph would contain loops, semi-edges
/// or parallel edges. Carries the darts responsible.
class NonSimpleLiftError : public Error {
 public:
  NonSimpleLiftError(std::vector<int> darts, const std::string& what)
      : Error(what), darts_(std::move(darts)) {}

  [[nodiscard]] const std::vector<int>& darts() const noexcept {
    return darts_;
  }

 private:
  std::vector<int> darts_;
};

/// Malformed textual input. Line and column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(format(line, column, what)), line_(line), column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(std::size_t line, std::size_t column,
                            const std::string& what) {
    std::string out = "parse error";
    if (line != 0) out += " at line " + std::to_string(line);
    if (column != 0) out += ", offset " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace nutforge
