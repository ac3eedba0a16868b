#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamswitch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input violates an operation's documented precondition (degree bound,
// parity, class membership, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An enumeration or dense computation would exceed its configured cap.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t count_so_far)
      : Error(what), count_so_far_(count_so_far) {}
  std::size_t count_so_far() const { return count_so_far_; }

 private:
  std::size_t count_so_far_;
};

// A constructive step whose existence is guaranteed under the precondition
// could not be carried out. Always indicates a bug or a violated precondition.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// A switch that is not a subset of E(G) or has odd size.
class InvalidSwitch : public Error {
 public:
  using Error::Error;
};

// A path system that is not in the image of the 2-factor embedding.
class ReconstructionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace hamswitch
