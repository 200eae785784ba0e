#pragma once

#include <stdexcept>
#include <string>

namespace phm {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed .phm text or numeric literal. line() is 1-based, 0 when unknown.
class SyntaxError : public Error {
 public:
  SyntaxError(int line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A coefficient table that is not a member of H_p (a_{1,1} != 1, |b_{1,1}| >= 1, bad indices).
class InvalidMap : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation requires class membership and the map fails it.
class NotMember : public Error {
 public:
  using Error::Error;
};

class WeightError : public Error {
 public:
  using Error::Error;
};

class ParamError : public Error {
 public:
  using Error::Error;
};

class ZeroValue : public Error {
 public:
  using Error::Error;
};

class ZeroDerivative : public Error {
 public:
  using Error::Error;
};

class GridTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace phm
