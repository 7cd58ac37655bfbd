#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chanda {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptyInput : public Error {
 public:
  EmptyInput() : Error("input text is empty") {}
};

class UnknownGanaLetter : public Error {
 public:
  explicit UnknownGanaLetter(const std::string& letter)
      : Error("unknown gana letter '" + letter + "'") {}
};

class ZeroTargetLength : public Error {
 public:
  ZeroTargetLength() : Error("similarity requires a non-empty target") {}
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class DuplicateMeterName : public Error {
 public:
  explicit DuplicateMeterName(const std::string& name)
      : Error("duplicate meter name '" + name + "'") {}
};

class InvalidGanaFormula : public Error {
 public:
  InvalidGanaFormula(std::size_t line, const std::string& formula)
      : Error("line " + std::to_string(line) + ": gana formula '" + formula +
              "' is not in canonical form") {}
};

}  // namespace chanda
