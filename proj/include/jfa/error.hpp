#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jfa {

// Base of every error the toolkit throws on contract violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (words, expressions, machine/semilinear/CNF files).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    return "line " + std::to_string(line) + ", column " +
           std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

// Operands that do not share an alphabet or a vector dimension.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// An operation was given an input outside its domain (wrong expression
// flavour, general machine where a finite machine is required, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// A configured size cap was exceeded.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& cap, const std::string& what)
      : Error(what), cap_(cap) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace jfa
