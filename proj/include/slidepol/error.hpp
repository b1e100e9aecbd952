#pragma once

#include <stdexcept>
#include <string>

namespace slidepol {

enum class Errc {
  invalid_argument,
  parse,
  unit_ideal,
  zero_ideal,
  not_determined,
  precondition,
  cap_exceeded,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error(Errc::parse, what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace slidepol
