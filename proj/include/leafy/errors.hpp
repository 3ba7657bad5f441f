#pragma once

#include <stdexcept>
#include <string>

namespace leafy {

/// Base of every error raised by the library. The CLI maps subclasses onto
/// exit codes, so new kinds must derive from one of the groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Digraph construction.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class CycleDetected : public Error {
 public:
  using Error::Error;
};

class NotRooted : public Error {
 public:
  using Error::Error;
};

// Branching / solver preconditions.
class IllegalExpansion : public Error {
 public:
  using Error::Error;
};

class NotTBranching : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

// Exhaustive oracles refuse instances above their guard.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class NotReducedInstance : public Error {
 public:
  using Error::Error;
};

// Serialization.
class ParseError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace leafy
