#pragma once

#include <stdexcept>
#include <string>

namespace hyperricci {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

// Raised when two vertices have no connecting path.
class Disconnected : public ValidationError {
 public:
  Disconnected(int x, int y)
      : ValidationError("Disconnected: no path between vertex " + std::to_string(x) +
                        " and vertex " + std::to_string(y)),
        x_(x),
        y_(y) {}

  int x() const noexcept { return x_; }
  int y() const noexcept { return y_; }

 private:
  int x_;
  int y_;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

class LpFailure : public SolverFailure {
 public:
  using SolverFailure::SolverFailure;
};

class NotAGraph : public Error {
 public:
  NotAGraph() : Error("NotAGraph: every hyperedge must have exactly two vertices") {}
};

class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

// A curvature limit whose divided differences never settled.
class NonStabilized : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperricci
