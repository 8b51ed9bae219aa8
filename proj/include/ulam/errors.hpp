#pragma once

#include <stdexcept>
#include <string>

namespace ulam {

/// Two arguments that must share a length do not.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Position index outside [n] or otherwise malformed.
class IndexError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Argument outside the domain on which a formula is defined.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Request exceeds a configured enumeration or search limit.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string &what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  static std::string format(const std::string &what, std::size_t line, std::size_t column) {
    if (line == 0)
      return what;
    std::string s = "line " + std::to_string(line);
    if (column != 0)
      s += ", column " + std::to_string(column);
    return s + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

} // namespace ulam
